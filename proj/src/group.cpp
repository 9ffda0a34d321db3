#include "npbrace/group.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npbrace {

namespace {

void verify_table(std::size_t n, const std::vector<Elem>& t) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  if (t.size() != n * n) throw std::invalid_argument("table size is not order^2");
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] != i || t[i * n] != i)
      throw std::invalid_argument("index 0 is not the identity");
  }
  std::vector<std::size_t> row_mark(n, n), col_mark(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem r = t[i * n + j];
      Elem c = t[j * n + i];
      if (r >= n || c >= n) throw std::invalid_argument("table entry out of range");
      if (row_mark[r] == i || col_mark[c] == i)
        throw std::invalid_argument("table is not a Latin square");
      row_mark[r] = i;
      col_mark[c] = i;
    }
  }
}

// Associativity. Small tables are checked on every triple. Larger ones use
// Light's test: the set of a with (x a) y = x (a y) for all x, y is closed
// under products, so it suffices to test a generating set.
void verify_associative(std::size_t n, const std::vector<Elem>& t) {
  auto mul = [&](Elem a, Elem b) { return t[std::size_t{a} * n + b]; };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("table is not associative");
    return;
  }
  std::vector<Elem> gens;
  std::vector<char> seen(n, 0);
  std::size_t reached = 1;
  for (Elem cand = 1; reached < n; ++cand) {
    if (seen[cand]) continue;
    gens.push_back(cand);
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Elem> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elem g : gens) {
        Elem y = mul(queue[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    reached = queue.size();
  }
  for (Elem g : gens)
    for (Elem x = 0; x < n; ++x) {
      Elem xg = mul(x, g);
      for (Elem y = 0; y < n; ++y)
        if (mul(xg, y) != mul(x, mul(g, y)))
          throw std::invalid_argument("table is not associative");
    }
}

std::string cyclic_label(std::size_t n) { return "C" + std::to_string(n); }

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(1, {0}, "1") {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, std::string label) {
  verify_table(order, table);
  if (order <= kVerifyBound) verify_associative(order, table);
  auto data = std::make_shared<Data>();
  data->order = order;
  data->inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (table[a * order + b] == 0) {
        data->inverse[a] = static_cast<Elem>(b);
        break;
      }
  for (std::size_t a = 0; a < order && data->abelian; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (table[a * order + b] != table[b * order + a]) {
        data->abelian = false;
        break;
      }
  data->table = std::move(table);
  data->label = std::move(label);
  data_ = std::move(data);
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  copy.data_ = std::move(data);
  return copy;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool GroupMap::is_homomorphism() const {
  if (images.size() != domain.order()) return false;
  if (images.empty() || images[0] != 0) return false;
  for (Elem x : images)
    if (x >= codomain.order()) return false;
  const auto n = static_cast<Elem>(domain.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images[domain.mul(a, b)] != codomain.mul(images[a], images[b])) return false;
  return true;
}

bool GroupMap::is_bijective() const {
  if (domain.order() != codomain.order() || images.size() != domain.order()) return false;
  std::vector<char> hit(codomain.order(), 0);
  for (Elem x : images) {
    if (x >= codomain.order() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

// ---- constructors ----------------------------------------------------------

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_cyclic: n must be positive");
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  return FiniteGroup(n, std::move(t), n == 1 ? "1" : cyclic_label(n));
}

FiniteGroup make_dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("make_dihedral: order must be even");
  const std::size_t m = order / 2;
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t i = x % m, j = y % m;
      bool xs = x >= m, ys = y >= m;
      std::size_t rot = xs ? (i + m - j) % m : (i + j) % m;
      t[x * order + y] = static_cast<Elem>(rot + ((xs != ys) ? m : 0));
    }
  }
  return FiniteGroup(order, std::move(t), "D" + std::to_string(order));
}

FiniteGroup make_dicyclic(std::size_t order) {
  if (order < 4 || order % 4 != 0)
    throw std::invalid_argument("make_dicyclic: order must be a multiple of 4");
  const std::size_t m = order / 4, n2 = 2 * m;
  std::vector<Elem> t(order * order);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t e, f;
          if (j == 0) {
            e = (i + k) % n2;
            f = l;
          } else {
            e = (i + n2 - k) % n2;
            f = 1 - l;
            if (l == 1) e = (e + m) % n2;
          }
          t[(2 * i + j) * order + (2 * k + l)] = static_cast<Elem>(2 * e + f);
        }
  return FiniteGroup(order, std::move(t), "Dic" + std::to_string(order));
}

FiniteGroup from_permutations(std::span<const Permutation> generators, std::string label) {
  if (generators.empty()) return FiniteGroup();
  const std::size_t degree = generators.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  std::map<Permutation, Elem> index;
  std::vector<Permutation> elems{id};
  index.emplace(id, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      if (g.size() != degree) throw std::invalid_argument("permutations of mixed degree");
      Permutation c = compose(elems[i], g);
      if (index.emplace(c, 0).second) elems.push_back(std::move(c));
    }
  }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = index.at(compose(elems[i], elems[j]));
  return FiniteGroup(n, std::move(t), std::move(label));
}

FiniteGroup make_alternating4() {
  const std::vector<Permutation> gens{{1, 2, 0, 3}, {1, 0, 3, 2}};
  return from_permutations(gens, "A4");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem pa = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem pb = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      t[x * n + y] = static_cast<Elem>(pa * nb + pb);
    }
  std::string label;
  if (a.order() == 1) label = b.label();
  else if (b.order() == 1) label = a.label();
  else if (!a.label().empty() && !b.label().empty()) label = a.label() + "x" + b.label();
  return FiniteGroup(n, std::move(t), std::move(label));
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               std::span<const Permutation> action) {
  const std::size_t na = a.order(), nb = b.order();
  if (action.size() != nb) throw std::invalid_argument("semidirect_product: action size");
  for (const auto& perm : action) {
    GroupMap m{a, a, perm};
    if (!m.is_bijective() || !m.is_homomorphism())
      throw std::invalid_argument("semidirect_product: action is not by automorphisms");
  }
  for (Elem x = 0; x < na; ++x)
    if (action[0][x] != x) throw std::invalid_argument("semidirect_product: act(1) != id");
  for (Elem u = 0; u < nb; ++u)
    for (Elem v = 0; v < nb; ++v) {
      const auto& uv = action[b.mul(u, v)];
      for (Elem x = 0; x < na; ++x)
        if (uv[x] != action[u][action[v][x]])
          throw std::invalid_argument("semidirect_product: action is not a homomorphism");
    }
  const std::size_t n = na * nb;
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
      Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      Elem pa = a.mul(xa, action[xb][ya]);
      t[x * n + y] = static_cast<Elem>(pa * nb + b.mul(xb, yb));
    }
  return FiniteGroup(n, std::move(t));
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const AutomorphismGroup& auts, const GroupMap& act) {
  if (!(auts.parent() == a)) throw std::invalid_argument("automorphisms of the wrong group");
  if (!(act.domain == b) || !(act.codomain == auts.carrier()) || !act.is_homomorphism())
    throw std::invalid_argument("semidirect_product: act is not a homomorphism into Aut(A)");
  std::vector<Permutation> perms;
  perms.reserve(b.order());
  for (Elem x : act.images) perms.push_back(auts.map(x));
  return semidirect_product(a, b, perms);
}

FiniteGroup make_abelian(std::span<const std::size_t> invariant_factors) {
  FiniteGroup g;
  std::string label;
  for (std::size_t f : invariant_factors) {
    if (f == 1) continue;
    g = direct_product(g, make_cyclic(f));
    label += (label.empty() ? "" : "x") + cyclic_label(f);
  }
  return g.with_label(label.empty() ? "1" : label);
}

namespace {

void partitions(std::size_t e, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(e, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(e - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> result{{}};
  std::size_t rest = n;
  for (auto q : prime_factors(n)) {
    std::size_t e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prev : result)
      for (const auto& part : parts) {
        std::vector<std::size_t> merged(std::max(prev.size(), part.size()), 1);
        for (std::size_t i = 0; i < prev.size(); ++i) merged[i] *= prev[i];
        for (std::size_t i = 0; i < part.size(); ++i) {
          std::size_t qk = 1;
          for (std::size_t j = 0; j < part[i]; ++j) qk *= q;
          merged[i] *= qk;
        }
        next.push_back(std::move(merged));
      }
    result = std::move(next);
  }
  if (n == 1) return {{}};
  std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x > y;
  });
  return result;
}

// ---- subgroups -------------------------------------------------------------

std::vector<Elem> find_generators(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> gens;
  Subgroup current = trivial_subgroup();
  while (current.order() < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::vector<Elem> trial = gens;
    trial.push_back(0);
    for (Elem x = 1; x < n; ++x) {
      if (current.contains(x)) continue;
      trial.back() = x;
      std::size_t size = subgroup_generated(g, trial).order();
      if (size > best_size) {
        best_size = size;
        best = x;
        if (size == n) break;
      }
    }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), Elem{0});
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  const auto n = static_cast<Elem>(g.order());
  for (Elem z = 0; z < n; ++z) {
    bool central = true;
    for (Elem x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) s.elements.push_back(z);
  }
  return s;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<char> seen(n, 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(g, comms);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) return false;
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem a : h.elements)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<Elem> cls;
    for (Elem x = 0; x < n; ++x) {
      Elem c = g.mul(g.mul(x, a), g.inv(x));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    Subgroup s = subgroup_generated(g, cls);
    if (std::find(closures.begin(), closures.end(), s) == closures.end())
      closures.push_back(std::move(s));
  }
  std::vector<Subgroup> found{trivial_subgroup()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& k : closures) {
      std::vector<char> seen(g.order(), 0);
      Subgroup join;
      for (Elem a : found[i].elements)
        for (Elem b : k.elements) {
          Elem c = g.mul(a, b);
          if (!seen[c]) {
            seen[c] = 1;
            join.elements.push_back(c);
          }
        }
      std::sort(join.elements.begin(), join.elements.end());
      if (std::find(found.begin(), found.end(), join) == found.end())
        found.push_back(std::move(join));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return found;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  const auto n = static_cast<Elem>(g.order());
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    auto k = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem a : h.elements) coset[g.mul(x, a)] = k;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = coset[g.mul(reps[i], reps[j])];
  FiniteGroup q(m, std::move(t));
  GroupMap proj{g, q, coset};
  return Quotient{std::move(q), std::move(proj)};
}

// ---- invariants ------------------------------------------------------------

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  const std::size_t n = g.order();
  std::vector<std::size_t> orders(n);
  for (Elem x = 0; x < n; ++x) orders[x] = element_order(g, x);
  std::vector<std::size_t> factors;
  for (auto q : prime_factors(n)) {
    // s_k = log_q #{x : x^(q^k) = 1}; parts >= k number s_k - s_{k-1}
    std::vector<std::size_t> at_least;
    std::size_t prev = 0, qk = 1;
    for (;;) {
      qk *= q;
      std::size_t count = 0;
      for (auto o : orders)
        if (qk % o == 0) ++count;
      std::size_t s = 0;
      for (std::size_t c = count; c > 1; c /= q) ++s;
      if (s == prev) break;
      at_least.push_back(s - prev);
      prev = s;
    }
    // exponent of the i-th largest cyclic q-factor
    std::size_t parts = at_least.empty() ? 0 : at_least.front();
    if (factors.size() < parts) factors.resize(parts, 1);
    for (std::size_t i = 0; i < parts; ++i) {
      std::size_t e = 0;
      for (auto c : at_least)
        if (c > i) ++e;
      for (std::size_t j = 0; j < e; ++j) factors[i] *= q;
    }
  }
  return factors;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.order_histogram.assign(f.order + 1, 0);
  for (Elem x = 0; x < f.order; ++x) ++f.order_histogram[element_order(g, x)];
  f.center_order = center(g).order();
  Subgroup d = derived_subgroup(g);
  f.derived_order = d.order();
  f.abelianization = abelian_invariants(quotient(g, d));
  for (const auto& cls : conjugacy_classes(g)) f.class_sizes.push_back(cls.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

namespace {

std::size_t count_of_order(const FiniteGroup& g, std::size_t k) {
  std::size_t c = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k) ++c;
  return c;
}

bool has_element_of_order(const FiniteGroup& g, std::size_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k) return true;
  return false;
}

}  // namespace

std::string isomorphism_type_of_order12(const FiniteGroup& g) {
  if (g.order() != 12)
    throw std::invalid_argument("isomorphism_type_of_order12: order is not 12");
  if (g.is_abelian()) return has_element_of_order(g, 12) ? "C12" : "C6xC2";
  switch (count_of_order(g, 2)) {
    case 3: return "A4";
    case 7: return "D12";
    case 1: return "Dic12";
  }
  throw std::logic_error("isomorphism_type_of_order12: impossible group table");
}

std::string group_label(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return "1";
  if (g.is_abelian()) {
    std::string label;
    for (auto f : abelian_invariants(g)) label += (label.empty() ? "C" : "xC") + std::to_string(f);
    return label;
  }
  if (n == 12) return isomorphism_type_of_order12(g);
  const std::size_t involutions = count_of_order(g, 2);
  if (n % 2 == 0 && has_element_of_order(g, n / 2) && involutions >= n / 2)
    return "D" + std::to_string(n);
  if (n % 4 == 0 && has_element_of_order(g, n / 2) && involutions == 1)
    return n == 8 ? "Q8" : "Dic" + std::to_string(n);
  return "G" + std::to_string(n);
}

}  // namespace npbrace
