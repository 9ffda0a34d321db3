#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "npbrace/group.hpp"
#include "npbrace/holomorph.hpp"
#include "npbrace/numtheory.hpp"

namespace npbrace {

/// Z_p^* as an abstract cyclic group: index i is the unit i + 1.
struct UnitsModP {
  std::uint64_t p = 0;
  FiniteGroup carrier;

  Elem index_of(std::uint64_t unit) const { return static_cast<Elem>(unit % p - 1); }
  std::uint64_t unit(Elem index) const { return index + 1; }
};

/// Throws std::invalid_argument unless p is prime.
UnitsModP units_mod_p(std::uint64_t p);

/// A morphism F -> Z_p^*, stored as the unit assigned to every element of F.
struct TauMorphism {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> values;

  std::uint32_t operator()(Elem x) const { return values[x]; }
  bool is_trivial() const;

  friend bool operator==(const TauMorphism&, const TauMorphism&) = default;
  friend auto operator<=>(const TauMorphism&, const TauMorphism&) = default;
};

TauMorphism trivial_tau(const FiniteGroup& f, std::uint64_t p);
bool is_tau_morphism(const FiniteGroup& f, const TauMorphism& tau);
/// tau o g for a permutation g of F's elements.
TauMorphism precompose(const TauMorphism& tau, const Permutation& g);
/// Multiplication-by-unit permutations of Z_p, one per element of F.
std::vector<Permutation> tau_action(const TauMorphism& tau);

/// Every morphism F -> Z_p^*: for each normal subgroup K with F/K cyclic of
/// order d | p - 1 (largest K first), the phi(d) maps sending a fixed
/// generator of F/K to zeta_d^e, e coprime to d ascending, where zeta_d is
/// unit_of_order(p, d).
std::vector<TauMorphism> enumerate_tau(const FiniteGroup& f, std::uint64_t p);

struct TauKernel {
  Subgroup subgroup;
  std::string label;
};
TauKernel kernel_of(const FiniteGroup& f, const TauMorphism& tau);

/// S_0 = { g in Aut F : tau o g = tau }, as a subgroup of the carrier.
Subgroup s_zero(const AutomorphismGroup& aut_f, const TauMorphism& tau);
Subgroup s_zero(const FiniteGroup& f, const TauMorphism& tau);

/// Z_p x|_tau F; element (i, f) has index i * |F| + f.
FiniteGroup tau_semidirect(const FiniteGroup& f, const TauMorphism& tau);

/// One equivalence class of pairs (F, tau).
struct TauClass {
  std::size_t f_class = 0;        // index into the regular classes of Hol(E)
  std::string f_label;
  std::size_t f_orbit_length = 0;
  TauMorphism tau;                // least value vector in the class; F on E's indices
  std::size_t orbit_size = 0;
  std::size_t kernel_order = 0;
  std::string kernel_label;

  /// Length of the matching conjugacy class in Hol(Z_p x E).
  std::size_t holomorph_orbit_length() const { return f_orbit_length * orbit_size; }
};

/// Classes of enumerate_tau(F, p) under tau ~ tau o Phi_nu|F, nu running
/// over the automorphisms of E normalizing F. F is the regular subgroup
/// given by `alpha`, viewed as regular_group(h, alpha).
std::vector<TauClass> tau_orbits(const HolomorphGroup& h, const AlphaMap& alpha, std::uint64_t p);

struct PairClassification {
  RegularClassification regular;  // regular subgroups of Hol(E)
  std::vector<TauClass> classes;
};

/// Complete classification of braces of size |E| p with additive group
/// Z_p x E. Throws HypothesisError when check_hypothesis(|E|, p) fails.
PairClassification classify_pairs_full(const FiniteGroup& e, std::uint64_t p,
                                       const RegularSearchOptions& options = {},
                                       std::size_t bound = kDefaultHolomorphBound);
std::vector<TauClass> classify_pairs(const FiniteGroup& e, std::uint64_t p,
                                     const RegularSearchOptions& options = {},
                                     std::size_t bound = kDefaultHolomorphBound);

}  // namespace npbrace
