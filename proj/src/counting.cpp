#include "npbrace/counting.hpp"

#include <algorithm>
#include <set>

namespace npbrace {

namespace {

void add_label(std::vector<std::string>& labels, const std::string& label) {
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
}

// Canonical order for n = 12, appearance order otherwise.
void order_types(std::vector<std::string>& labels, std::uint64_t n) {
  if (n != 12) return;
  auto canon = order12_types();
  for (const auto& l : labels) add_label(canon, l);
  labels = canon;
}

RegularSearchOptions search_options(const CountOptions& options) {
  RegularSearchOptions s;
  s.threads = options.threads;
  return s;
}

std::string kernel_column(std::size_t f_order, std::size_t kernel_order, const std::string& label) {
  return kernel_order == f_order ? "F" : label;
}

// Sieve of isomorphism-class representatives keyed by fingerprint.
class IsoIndex {
 public:
  std::optional<std::size_t> find(const FiniteGroup& g) const {
    const auto fp = fingerprint(g);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (fps_[i] == fp && are_isomorphic(g, reps_[i])) return i;
    return std::nullopt;
  }
  std::size_t add(const FiniteGroup& g) {
    reps_.push_back(g);
    fps_.push_back(fingerprint(g));
    return reps_.size() - 1;
  }

 private:
  std::vector<FiniteGroup> reps_;
  std::vector<Fingerprint> fps_;
};

}  // namespace

std::vector<std::string> order12_types() { return {"C12", "C6xC2", "A4", "D12", "Dic12"}; }

std::vector<std::string> sort_kernel_columns(std::vector<std::pair<std::size_t, std::string>> cols) {
  auto cyclic = [](const std::string& l) { return l == "1" || (l[0] == 'C' && l.find('x') == std::string::npos); };
  std::sort(cols.begin(), cols.end(), [&](const auto& a, const auto& b) {
    if ((a.second == "F") != (b.second == "F")) return a.second == "F";
    if (a.first != b.first) return a.first > b.first;
    if (cyclic(a.second) != cyclic(b.second)) return cyclic(a.second);
    return a.second < b.second;
  });
  std::vector<std::string> out;
  for (const auto& c : cols) add_label(out, c.second);
  return out;
}

std::size_t BraceCensus::at(const std::string& e, const std::string& f) const {
  auto it = rows.find({e, f});
  return it == rows.end() ? 0 : it->second;
}

std::vector<std::size_t> BraceCensus::row(const std::string& e) const {
  std::vector<std::size_t> out;
  for (const auto& f : multiplicative_types) out.push_back(at(e, f));
  return out;
}

BraceCensus brace_count(std::uint64_t n, std::uint64_t p, const CountOptions& options) {
  if (!check_hypothesis(n, p)) throw HypothesisError(hypothesis_diagnostic(n, p));
  BraceCensus census;
  census.n = n;
  census.p = p;
  for (const auto& type : abelian_types(n)) {
    const auto e = make_abelian(type);
    census.additive_types.push_back(e.label());
    for (const auto& cls : classify_pairs(e, p, search_options(options), options.bound)) {
      ++census.rows[{e.label(), cls.f_label}];
      add_label(census.multiplicative_types, cls.f_label);
      ++census.total;
    }
  }
  order_types(census.multiplicative_types, n);
  return census;
}

BraceCensus brace_count_bruteforce(std::uint64_t m, const CountOptions& options) {
  BraceCensus census;
  census.n = m;
  for (const auto& type : abelian_types(m)) {
    const auto nn = make_abelian(type);
    census.additive_types.push_back(nn.label());
    for (const auto& cls : classify_regular(holomorph(nn, options.bound), search_options(options))) {
      ++census.rows[{nn.label(), cls.iso_label}];
      add_label(census.multiplicative_types, cls.iso_label);
      ++census.total;
    }
  }
  order_types(census.multiplicative_types, m);
  return census;
}

BraceCensus regular_subgroup_table(std::uint64_t n, const CountOptions& options) {
  BraceCensus census;
  census.n = n;
  for (const auto& type : abelian_types(n)) {
    const auto e = make_abelian(type);
    census.additive_types.push_back(e.label());
    const auto h = holomorph(e, options.bound);
    for (const auto& alpha : enumerate_alpha_maps(h, search_options(options))) {
      const auto label = regular_group(h, alpha).label();
      ++census.rows[{e.label(), label}];
      add_label(census.multiplicative_types, label);
      ++census.total;
    }
  }
  order_types(census.multiplicative_types, n);
  return census;
}

std::uint64_t s_set_order(std::uint64_t p, const FiniteGroup& f, const TauMorphism& tau) {
  if (tau.is_trivial()) throw std::invalid_argument("s_set_order: tau is trivial");
  return (p - 1) * s_zero(f, tau).order();
}

std::uint64_t aut_order_Gnp(std::uint64_t p, const FiniteGroup& f, const TauMorphism& tau) {
  if (tau.is_trivial()) return (p - 1) * count_automorphisms(f);
  return p * s_set_order(p, f, tau);
}

AlphaMap pair_to_alpha(const HolomorphGroup& hn, const HolomorphGroup& he, const AlphaMap& f_alpha,
                       const TauMorphism& tau) {
  const std::size_t ne = he.base().order();
  const std::uint64_t p = tau.p;
  if (hn.base().order() != p * ne) throw std::invalid_argument("pair_to_alpha: holomorph sizes do not match");
  std::vector<Elem> per_e(ne);
  Permutation perm(p * ne);
  for (Elem e = 0; e < ne; ++e) {
    for (Elem m = 0; m < p; ++m)
      for (Elem x = 0; x < ne; ++x)
        perm[m * ne + x] = static_cast<Elem>(m * tau(e) % p * ne + he.auts().apply(f_alpha[e], x));
    auto idx = hn.auts().index_of(perm);
    if (!idx) throw std::invalid_argument("pair_to_alpha: product map is not an automorphism");
    per_e[e] = *idx;
  }
  AlphaMap alpha(p * ne);
  for (Elem m = 0; m < p; ++m)
    for (Elem e = 0; e < ne; ++e) alpha[m * ne + e] = per_e[e];
  return alpha;
}

ByottCount byott_count(const FiniteGroup& n, const FiniteGroup& g, const CountOptions& options) {
  if (n.order() != g.order()) throw std::invalid_argument("byott_count: orders differ");
  if (!n.is_abelian()) throw std::invalid_argument("byott_count: N must be abelian");
  ByottCount out;
  const auto fp = fingerprint(g);
  const auto h = holomorph(n, options.bound);
  for (const auto& cls : classify_regular(h, search_options(options))) {
    auto rg = regular_group(h, cls.alpha);
    if (fingerprint(rg) == fp && are_isomorphic(rg, g)) out.b += cls.orbit_length;
  }
  out.aut_g = count_automorphisms(g, std::max(g.order(), kVerifyBound));
  out.aut_n = count_automorphisms(n, std::max(n.order(), kVerifyBound));

  std::uint64_t p = 0;
  for (auto q : prime_factors(n.order()))
    if ((n.order() / q) % q != 0 && check_hypothesis(n.order() / q, q)) p = q;
  if (p != 0) {
    const std::size_t m = n.order() / p;
    Subgroup torsion;
    for (Elem x = 0; x < n.order(); ++x)
      if (m % element_order(n, x) == 0) torsion.elements.push_back(x);
    const auto e = subgroup_as_group(n, torsion);
    const auto pairs = classify_pairs_full(e, p, search_options(options), options.bound);
    const auto he = holomorph(e, options.bound);
    std::size_t b = 0;
    for (const auto& cls : pairs.classes) {
      auto f = regular_group(he, pairs.regular.classes[cls.f_class].alpha);
      auto gp = tau_semidirect(f, cls.tau);
      if (fingerprint(gp) == fp && are_isomorphic(gp, g)) b += cls.holomorph_orbit_length();
    }
    out.b_pairs = b;
    if (b != out.b) throw Error("byott_count: pair route gives " + std::to_string(b) +
                                ", direct route gives " + std::to_string(out.b));
  }
  if ((out.aut_g * out.b) % out.aut_n != 0) throw Error("byott_count: non-integral count");
  out.a = out.aut_g * out.b / out.aut_n;
  return out;
}

const HgsCell* HgsCensus::cell(const std::string& f, const std::string& column) const {
  auto it = entries.find({f, column});
  return it == entries.end() ? nullptr : &it->second;
}

bool HgsCensus::routes_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.routes_agree(); });
}

HgsCensus hgs_table(std::uint64_t p, const FiniteGroup& e, bool cross_check, const CountOptions& options) {
  const std::size_t n = e.order();
  if (!check_hypothesis(n, p)) throw HypothesisError(hypothesis_diagnostic(n, p));
  const auto search = search_options(options);

  HgsCensus census;
  census.p = p;
  census.e_label = e.label();
  const auto big_n = direct_product(make_cyclic(p), e);
  census.n_label = group_label(big_n);
  census.aut_n = (p - 1) * count_automorphisms(e);

  // abstract F types: every multiplicative group of a brace of size n
  std::map<std::string, FiniteGroup> f_types;
  for (const auto& type : abelian_types(n)) {
    const auto h = holomorph(make_abelian(type), options.bound);
    for (const auto& cls : classify_regular(h, search))
      if (!f_types.count(cls.iso_label)) {
        census.rows.push_back(cls.iso_label);
        f_types.emplace(cls.iso_label, regular_group(h, cls.alpha));
      }
  }
  order_types(census.rows, n);

  // applicable cells, each with a representative G = Z_p x|_tau F
  std::map<std::pair<std::string, std::string>, FiniteGroup> cell_group;
  std::vector<std::pair<std::size_t, std::string>> columns;
  for (const auto& f_label : census.rows) {
    auto it = f_types.find(f_label);
    if (it == f_types.end()) continue;
    const auto& f = it->second;
    for (const auto& tau : enumerate_tau(f, p)) {
      const auto k = kernel_of(f, tau);
      const auto col = kernel_column(n, k.subgroup.order(), k.label);
      const std::pair key{f_label, col};
      if (census.entries.count(key)) continue;
      columns.emplace_back(k.subgroup.order(), col);
      HgsCell& cell = census.entries[key];
      cell.aut_g = aut_order_Gnp(p, f, tau);
      cell_group.emplace(key, tau_semidirect(f, tau));
    }
  }
  census.columns = sort_kernel_columns(columns);

  // pair route: orbit lengths of the pair classes
  const auto pairs = classify_pairs_full(e, p, search, options.bound);
  const auto he = holomorph(e, options.bound);
  for (const auto& cls : pairs.classes) {
    const auto col = kernel_column(n, cls.kernel_order, cls.kernel_label);
    auto it = census.entries.find({cls.f_label, col});
    if (it == census.entries.end()) throw Error("hgs_table: pair class outside the table");
    const auto f = regular_group(he, pairs.regular.classes[cls.f_class].alpha);
    if (aut_order_Gnp(p, f, cls.tau) != it->second.aut_g)
      throw Error("hgs_table: automorphism orders differ within one cell");
    it->second.b += cls.holomorph_orbit_length();
  }
  for (auto& [key, cell] : census.entries) {
    if ((cell.aut_g * cell.b) % census.aut_n != 0) throw Error("hgs_table: non-integral count");
    cell.a = cell.aut_g * cell.b / census.aut_n;
  }

  if (cross_check) {
    // direct route: classify every regular subgroup of Hol(N) by its group
    IsoIndex index;
    std::vector<std::pair<std::string, std::string>> index_keys;
    for (const auto& [key, g] : cell_group) {
      if (index.find(g)) throw Error("hgs_table: two cells share an isomorphism type");
      index.add(g);
      index_keys.push_back(key);
    }
    const auto hn = holomorph(big_n, options.bound);
    const std::uint64_t aut_n_direct = hn.aut_order();
    for (const auto& cls : classify_regular(hn, search)) {
      auto which = index.find(regular_group(hn, cls.alpha));
      if (!which) throw Error("hgs_table: regular subgroup of unexpected type");
      census.entries[index_keys[*which]].b_direct += cls.orbit_length;
    }
    for (auto& [key, cell] : census.entries) {
      const auto& g = cell_group.at(key);
      cell.aut_g_direct = count_automorphisms(g, std::max(g.order(), kVerifyBound));
      cell.a_direct = cell.aut_g_direct * cell.b_direct / aut_n_direct;
    }
  }
  return census;
}

}  // namespace npbrace
