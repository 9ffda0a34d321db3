#include "npbrace/tau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace npbrace {

UnitsModP units_mod_p(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("units_mod_p: " + std::to_string(p) + " is not prime");
  const std::size_t m = p - 1;
  std::vector<Elem> t(m * m);
  for (std::uint64_t a = 1; a < p; ++a)
    for (std::uint64_t b = 1; b < p; ++b) t[(a - 1) * m + (b - 1)] = static_cast<Elem>(a * b % p - 1);
  return {p, FiniteGroup(m, std::move(t), "Z" + std::to_string(p) + "*")};
}

bool TauMorphism::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](std::uint32_t u) { return u == 1; });
}

TauMorphism trivial_tau(const FiniteGroup& f, std::uint64_t p) {
  return {p, std::vector<std::uint32_t>(f.order(), 1)};
}

bool is_tau_morphism(const FiniteGroup& f, const TauMorphism& tau) {
  if (tau.values.size() != f.order() || !is_prime(tau.p)) return false;
  for (auto u : tau.values)
    if (u == 0 || u >= tau.p) return false;
  for (Elem a = 0; a < f.order(); ++a)
    for (Elem b = 0; b < f.order(); ++b)
      if (tau(f.mul(a, b)) != std::uint64_t{tau(a)} * tau(b) % tau.p) return false;
  return true;
}

TauMorphism precompose(const TauMorphism& tau, const Permutation& g) {
  TauMorphism out{tau.p, std::vector<std::uint32_t>(tau.values.size())};
  for (std::size_t x = 0; x < g.size(); ++x) out.values[x] = tau.values[g[x]];
  return out;
}

std::vector<Permutation> tau_action(const TauMorphism& tau) {
  std::vector<Permutation> out;
  out.reserve(tau.values.size());
  for (auto u : tau.values) {
    Permutation perm(tau.p);
    for (std::uint64_t i = 0; i < tau.p; ++i) perm[i] = static_cast<Elem>(i * u % tau.p);
    out.push_back(std::move(perm));
  }
  return out;
}

std::vector<TauMorphism> enumerate_tau(const FiniteGroup& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_tau: p is not prime");
  auto normals = normal_subgroups(f);
  std::reverse(normals.begin(), normals.end());
  std::vector<TauMorphism> out;
  for (const auto& k : normals) {
    const std::size_t d = f.order() / k.order();
    if ((p - 1) % d != 0) continue;
    auto q = quotient_group(f, k);
    // generator of the quotient, if cyclic
    Elem gen = 0;
    for (Elem c = 0; c < q.group.order(); ++c)
      if (element_order(q.group, c) == d) {
        gen = c;
        break;
      }
    if (element_order(q.group, gen) != d) continue;
    // discrete log of every coset with respect to gen
    std::vector<std::uint64_t> log(d, 0);
    for (Elem c = 0, i = 0; i < d; ++i, c = q.group.mul(c, gen)) log[c] = i;
    const std::uint64_t zeta = unit_of_order(p, d);
    for (std::uint64_t e = 1; e <= d; ++e) {
      if (std::gcd(e, d) != 1) continue;
      const std::uint64_t z = power_mod(zeta, e, p);
      TauMorphism tau{p, std::vector<std::uint32_t>(f.order())};
      for (Elem x = 0; x < f.order(); ++x)
        tau.values[x] = static_cast<std::uint32_t>(power_mod(z, log[q.projection(x)], p));
      out.push_back(std::move(tau));
    }
  }
  return out;
}

TauKernel kernel_of(const FiniteGroup& f, const TauMorphism& tau) {
  TauKernel k;
  for (Elem x = 0; x < f.order(); ++x)
    if (tau(x) == 1) k.subgroup.elements.push_back(x);
  k.label = group_label(subgroup_as_group(f, k.subgroup));
  return k;
}

Subgroup s_zero(const AutomorphismGroup& aut_f, const TauMorphism& tau) {
  Subgroup s;
  for (Elem g = 0; g < aut_f.order(); ++g)
    if (precompose(tau, aut_f.map(g)) == tau) s.elements.push_back(g);
  return s;
}

Subgroup s_zero(const FiniteGroup& f, const TauMorphism& tau) {
  return s_zero(automorphism_group(f), tau);
}

FiniteGroup tau_semidirect(const FiniteGroup& f, const TauMorphism& tau) {
  const auto action = tau_action(tau);
  return semidirect_product(make_cyclic(tau.p), f, action);
}

std::vector<TauClass> tau_orbits(const HolomorphGroup& h, const AlphaMap& alpha, std::uint64_t p) {
  const auto f = regular_group(h, alpha);
  const auto taus = enumerate_tau(f, p);
  std::vector<Permutation> stabilizer;
  for (Elem nu : normalizing_automorphisms(h, alpha)) stabilizer.push_back(h.auts().map(nu));

  std::set<TauMorphism> seen;
  std::vector<TauClass> out;
  for (const auto& tau : taus) {
    if (seen.count(tau)) continue;
    std::set<TauMorphism> orbit;
    for (const auto& nu : stabilizer) orbit.insert(precompose(tau, nu));
    seen.insert(orbit.begin(), orbit.end());
    TauClass cls;
    cls.f_label = f.label();
    cls.tau = *orbit.begin();
    cls.orbit_size = orbit.size();
    auto k = kernel_of(f, cls.tau);
    cls.kernel_order = k.subgroup.order();
    cls.kernel_label = k.label;
    out.push_back(std::move(cls));
  }
  return out;
}

PairClassification classify_pairs_full(const FiniteGroup& e, std::uint64_t p,
                                       const RegularSearchOptions& options, std::size_t bound) {
  if (!check_hypothesis(e.order(), p)) throw HypothesisError(hypothesis_diagnostic(e.order(), p));
  auto h = holomorph(e, bound);
  PairClassification out;
  out.regular = classify_regular_full(h, options);
  for (std::size_t i = 0; i < out.regular.classes.size(); ++i) {
    const auto& rc = out.regular.classes[i];
    for (auto& cls : tau_orbits(h, rc.alpha, p)) {
      cls.f_class = i;
      cls.f_orbit_length = rc.orbit_length;
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

std::vector<TauClass> classify_pairs(const FiniteGroup& e, std::uint64_t p,
                                     const RegularSearchOptions& options, std::size_t bound) {
  return classify_pairs_full(e, p, options, bound).classes;
}

}  // namespace npbrace
