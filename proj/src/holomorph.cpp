#include "npbrace/holomorph.hpp"

#include <algorithm>
#include <thread>

namespace npbrace {

namespace {

constexpr Elem kUnset = ~Elem{0};

}  // namespace

HolomorphGroup::HolomorphGroup(FiniteGroup base, AutomorphismGroup auts)
    : base_(std::move(base)),
      auts_(std::move(auts)),
      aut_order_(static_cast<Elem>(auts_.order())),
      order_(base_.order() * auts_.order()) {
  if (!base_.is_abelian()) throw std::invalid_argument("holomorph: base group is not abelian");
  if (!(auts_.parent() == base_))
    throw std::invalid_argument("holomorph: automorphisms belong to another group");
}

Elem HolomorphGroup::inv(Elem g) const {
  auto [x, a] = decode(g);
  const Elem ainv = auts_.carrier().inv(a);
  return encode(auts_.apply(ainv, base_.inv(x)), ainv);
}

Elem HolomorphGroup::act(Elem g, Elem z) const {
  auto [x, a] = decode(g);
  return base_.mul(x, auts_.apply(a, z));
}

FiniteGroup HolomorphGroup::group() const {
  if (order_ > kVerifyBound)
    throw ResourceError("holomorph of order " + std::to_string(order_) +
                        " is too large to tabulate");
  std::vector<Elem> t(order_ * order_);
  for (Elem g = 0; g < order_; ++g)
    for (Elem h = 0; h < order_; ++h) t[std::size_t{g} * order_ + h] = mul(g, h);
  return FiniteGroup(order_, std::move(t), "Hol(" + base_.label() + ")");
}

Subgroup HolomorphGroup::translations() const {
  Subgroup s;
  for (Elem x = 0; x < base_.order(); ++x) s.elements.push_back(encode(x, 0));
  return s;
}

Subgroup HolomorphGroup::automorphism_part() const {
  Subgroup s;
  for (Elem a = 0; a < aut_order_; ++a) s.elements.push_back(encode(0, a));
  return s;
}

HolomorphGroup holomorph(const FiniteGroup& n, std::size_t bound) {
  if (!n.is_abelian()) throw std::invalid_argument("holomorph: group is not abelian");
  auto auts = automorphism_group(n, std::max<std::size_t>(bound, n.order()));
  if (n.order() * auts.order() > bound)
    throw ResourceError("holomorph order " + std::to_string(n.order() * auts.order()) +
                        " exceeds bound " + std::to_string(bound));
  return HolomorphGroup(n, std::move(auts));
}

Subgroup alpha_to_subgroup(const HolomorphGroup& h, const AlphaMap& alpha) {
  Subgroup s;
  s.elements.reserve(alpha.size());
  for (Elem x = 0; x < alpha.size(); ++x) s.elements.push_back(h.encode(x, alpha[x]));
  return s;
}

std::optional<AlphaMap> subgroup_to_alpha(const HolomorphGroup& h, const Subgroup& s) {
  if (!is_regular(h, s)) return std::nullopt;
  AlphaMap alpha(h.base().order());
  for (Elem g : s.elements) {
    auto [x, a] = h.decode(g);
    alpha[x] = a;
  }
  return alpha;
}

bool is_regular(const HolomorphGroup& h, const Subgroup& s) {
  if (s.order() != h.base().order()) return false;
  std::vector<char> hit(h.base().order(), 0);
  for (Elem g : s.elements) {
    const Elem x = h.act(g, 0);
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

FiniteGroup regular_group(const HolomorphGroup& h, const AlphaMap& alpha) {
  const std::size_t n = h.base().order();
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[x * n + y] = h.base().mul(x, h.auts().apply(alpha[x], y));
  FiniteGroup g(n, std::move(t));
  return g.with_label(group_label(g));
}

AlphaMap conjugate_alpha(const HolomorphGroup& h, Elem nu, const AlphaMap& alpha) {
  const auto& carrier = h.auts().carrier();
  const Elem nu_inv = carrier.inv(nu);
  AlphaMap out(alpha.size());
  for (Elem x = 0; x < alpha.size(); ++x)
    out[h.auts().apply(nu, x)] = carrier.mul(carrier.mul(nu, alpha[x]), nu_inv);
  return out;
}

Subgroup inner_conjugate(const HolomorphGroup& h, Elem nu, const Subgroup& s) {
  const auto& carrier = h.auts().carrier();
  const Elem nu_inv = carrier.inv(nu);
  Subgroup out;
  for (Elem g : s.elements) {
    auto [x, a] = h.decode(g);
    out.elements.push_back(
        h.encode(h.auts().apply(nu, x), carrier.mul(carrier.mul(nu, a), nu_inv)));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Elem> normalizing_automorphisms(const HolomorphGroup& h, const AlphaMap& alpha) {
  std::vector<Elem> out;
  for (Elem nu = 0; nu < h.aut_order(); ++nu)
    if (conjugate_alpha(h, nu, alpha) == alpha) out.push_back(nu);
  return out;
}

namespace {

// Depth-first construction of alpha-maps. The assigned pairs always form a
// subgroup of Hol(N) projecting injectively to N; a new pair (x, a) for the
// smallest unassigned x is adjoined and the closure is propagated, and any
// element of N receiving two different automorphisms kills the branch.
class AlphaSearch {
 public:
  explicit AlphaSearch(const HolomorphGroup& h)
      : h_(h), n_(static_cast<Elem>(h.base().order())), m_(static_cast<Elem>(h.aut_order())) {
    alpha_.assign(n_, kUnset);
    alpha_[0] = 0;
    members_.push_back(0);
  }

  // Runs the subtree where the first free element gets automorphism `first`
  // (all first choices when nullopt).
  void run(std::optional<Elem> first, std::vector<AlphaMap>& out) {
    out_ = &out;
    if (n_ == 1) {
      out.push_back(alpha_);
      return;
    }
    const Elem x = next_free();
    if (first) {
      try_branch(x, *first);
    } else {
      for (Elem a = 0; a < m_; ++a) try_branch(x, a);
    }
  }

 private:
  Elem next_free() const {
    for (Elem x = 0; x < n_; ++x)
      if (alpha_[x] == kUnset) return x;
    return kUnset;
  }

  // Powers of (x, a) must return to 0 in N exactly when the automorphism
  // part is the identity and agree with existing assignments.
  bool cyclic_ok(Elem x, Elem a) const {
    const auto& carrier = h_.auts().carrier();
    Elem y = x, b = a;
    for (Elem step = 0; step < n_; ++step) {
      if (y == 0) return b == 0;
      if (alpha_[y] != kUnset && alpha_[y] != b) return false;
      const Elem ny = h_.base().mul(y, h_.auts().apply(b, x));
      b = carrier.mul(b, a);
      y = ny;
    }
    return false;
  }

  bool close() {
    const auto& carrier = h_.auts().carrier();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const Elem u = members_[i];
      const Elem au = alpha_[u];
      for (auto [gx, ga] : gens_) {
        const Elem z = h_.base().mul(u, h_.auts().apply(au, gx));
        const Elem b = carrier.mul(au, ga);
        if (alpha_[z] == kUnset) {
          alpha_[z] = b;
          members_.push_back(z);
        } else if (alpha_[z] != b) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (members_.size() > mark) {
      alpha_[members_.back()] = kUnset;
      members_.pop_back();
    }
  }

  void try_branch(Elem x, Elem a) {
    if (!cyclic_ok(x, a)) return;
    const std::size_t mark = members_.size();
    alpha_[x] = a;
    members_.push_back(x);
    gens_.emplace_back(x, a);
    if (close()) {
      if (members_.size() == n_) {
        out_->push_back(alpha_);
      } else {
        const Elem y = next_free();
        for (Elem b = 0; b < m_; ++b) try_branch(y, b);
      }
    }
    gens_.pop_back();
    undo(mark);
  }

  const HolomorphGroup& h_;
  Elem n_, m_;
  AlphaMap alpha_;
  std::vector<Elem> members_;
  std::vector<std::pair<Elem, Elem>> gens_;
  std::vector<AlphaMap>* out_ = nullptr;
};

}  // namespace

std::vector<AlphaMap> enumerate_alpha_maps(const HolomorphGroup& h,
                                           const RegularSearchOptions& options) {
  std::vector<AlphaMap> result;
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1 || h.base().order() == 1) {
    AlphaSearch(h).run(std::nullopt, result);
  } else {
    const Elem m = static_cast<Elem>(h.aut_order());
    std::vector<std::vector<AlphaMap>> parts(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (Elem a = static_cast<Elem>(t); a < m; a += static_cast<Elem>(threads))
          AlphaSearch(h).run(a, parts[t]);
      });
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      for (auto& alpha : part) result.push_back(std::move(alpha));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Subgroup> regular_subgroups(const HolomorphGroup& h,
                                        const RegularSearchOptions& options) {
  std::vector<Subgroup> out;
  for (const auto& alpha : enumerate_alpha_maps(h, options))
    out.push_back(alpha_to_subgroup(h, alpha));
  return out;
}

RegularClassification classify_regular_full(const HolomorphGroup& h,
                                            const RegularSearchOptions& options) {
  RegularClassification result;
  result.subgroups = enumerate_alpha_maps(h, options);
  const auto& subs = result.subgroups;
  const auto& carrier = h.auts().carrier();
  std::vector<Elem> gens = options.aut_generators;
  if (gens.empty()) gens = find_generators(carrier);

  auto index_of = [&](const AlphaMap& alpha) {
    auto it = std::lower_bound(subs.begin(), subs.end(), alpha);
    if (it == subs.end() || *it != alpha)
      throw std::logic_error("classify_regular: conjugate is not in the enumeration");
    return static_cast<std::size_t>(it - subs.begin());
  };

  std::vector<char> seen(subs.size(), 0);
  for (std::size_t start = 0; start < subs.size(); ++start) {
    if (seen[start]) continue;
    RegularClass cls;
    cls.alpha = subs[start];
    cls.representative = alpha_to_subgroup(h, cls.alpha);
    cls.members.push_back(start);
    cls.witnesses.push_back(0);
    seen[start] = 1;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (Elem g : gens) {
        std::size_t j = index_of(conjugate_alpha(h, g, subs[cls.members[i]]));
        if (seen[j]) continue;
        seen[j] = 1;
        cls.members.push_back(j);
        cls.witnesses.push_back(carrier.mul(g, cls.witnesses[i]));
      }
    }
    cls.orbit_length = cls.members.size();
    cls.iso_label = regular_group(h, cls.alpha).label();
    result.classes.push_back(std::move(cls));
  }
  return result;
}

std::vector<RegularClass> classify_regular(const HolomorphGroup& h,
                                           const RegularSearchOptions& options) {
  return classify_regular_full(h, options).classes;
}

}  // namespace npbrace
