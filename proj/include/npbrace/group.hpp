#pragma once

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "npbrace/numtheory.hpp"

namespace npbrace {

using Elem = std::uint32_t;
using Permutation = std::vector<Elem>;

/// Largest order for which constructors validate associativity.
inline constexpr std::size_t kVerifyBound = 5000;

/// Immutable finite group stored as a full Cayley table over the dense
/// indices 0..order-1. Index 0 is always the identity. Copies share the
/// table.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// `table` is row-major: table[a * order + b] = a * b. Validates the
  /// identity law, the Latin property and (up to kVerifyBound) associativity.
  FiniteGroup(std::size_t order, std::vector<Elem> table, std::string label = {});

  std::size_t order() const { return data_->order; }
  Elem mul(Elem a, Elem b) const { return data_->table[std::size_t{a} * data_->order + b]; }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  static constexpr Elem identity() { return 0; }

  std::span<const Elem> table() const { return data_->table; }
  const std::string& label() const { return data_->label; }
  FiniteGroup with_label(std::string label) const;

  bool is_abelian() const { return data_->abelian; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::string label;
    bool abelian = true;
  };
  std::shared_ptr<const Data> data_;
};

/// Anything exposing a finite group through dense indices with identity 0.
template <class G>
concept GroupLike = requires(const G& g, Elem a, Elem b) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.mul(a, b) } -> std::convertible_to<Elem>;
  { g.inv(a) } -> std::convertible_to<Elem>;
};

/// Sorted element-index set inside some parent group. The parent is passed
/// explicitly to the functions that need it, so the same type serves
/// materialized groups and holomorphs computed on the fly.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Homomorphism given by the image of every domain element.
struct GroupMap {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

/// Full automorphism group of `parent`: an abstract group (`carrier`) plus a
/// faithful action on the parent's elements. Carrier index 0 is the
/// identity map and carrier products compose as maps: (a * b)(x) = a(b(x)).
/// Automorphisms are indexed in lexicographic order of their permutations.
class AutomorphismGroup {
 public:
  AutomorphismGroup(FiniteGroup parent, std::vector<Permutation> action);

  const FiniteGroup& parent() const { return parent_; }
  const FiniteGroup& carrier() const { return carrier_; }
  std::size_t order() const { return action_.size(); }
  const Permutation& map(Elem a) const { return action_[a]; }
  Elem apply(Elem a, Elem x) const { return action_[a][x]; }
  std::span<const Permutation> action() const { return action_; }
  /// Carrier index of a permutation, if it is one of the automorphisms.
  std::optional<Elem> index_of(const Permutation& perm) const;

 private:
  FiniteGroup parent_;
  FiniteGroup carrier_;
  std::vector<Permutation> action_;
};

// ---- constructors ----------------------------------------------------------

FiniteGroup make_cyclic(std::size_t n);
/// Dihedral group of the given order (2m): rotations r^i = i, reflections
/// r^i s = m + i.
FiniteGroup make_dihedral(std::size_t order);
/// Dicyclic group <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1> of order 4m;
/// a^i x^j has index 2i + j.
FiniteGroup make_dicyclic(std::size_t order);
FiniteGroup make_alternating4();
/// Group generated by permutations of {0..degree-1}; identity is index 0,
/// the remaining elements are sorted lexicographically.
FiniteGroup from_permutations(std::span<const Permutation> generators, std::string label = {});

/// Element (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Product (a, b)(a', b') = (a * act_b(a'), b b'), element (a, b) at index
/// a * |B| + b. `action[b]` is a permutation of A; throws std::invalid_argument
/// unless b -> action[b] is a homomorphism into Aut(A).
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               std::span<const Permutation> action);
/// Same, with the action given as a GroupMap from B into `auts.carrier()`.
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const AutomorphismGroup& auts, const GroupMap& act);

/// Cyclic groups of the invariant factors in descending order, multiplied.
FiniteGroup make_abelian(std::span<const std::size_t> invariant_factors);
/// Invariant factor lists (descending, each dividing the previous) of every
/// abelian group of order n, ordered with the cyclic group first.
std::vector<std::vector<std::size_t>> abelian_types(std::size_t n);

// ---- generic subgroup machinery -------------------------------------------

template <GroupLike G>
std::size_t element_order(const G& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

/// Closure of {identity} under right multiplication by the generators.
template <GroupLike G>
Subgroup subgroup_generated(const G& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

template <GroupLike G>
Subgroup subgroup_generated(const G& g, std::initializer_list<Elem> gens) {
  return subgroup_generated(g, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Checks identity, closure and inverses, and that |S| divides |G|.
template <GroupLike G>
bool is_subgroup(const G& g, const Subgroup& s) {
  if (s.elements.empty() || s.elements.front() != 0) return false;
  if (!std::is_sorted(s.elements.begin(), s.elements.end())) return false;
  if (g.order() % s.order() != 0) return false;
  for (Elem a : s.elements) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : s.elements)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

/// The subgroup as an abstract group; element i of the result is
/// s.elements[i].
template <GroupLike G>
FiniteGroup subgroup_as_group(const G& g, const Subgroup& s, std::string label = {}) {
  const std::size_t n = s.order();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem prod = g.mul(s.elements[i], s.elements[j]);
      auto it = std::lower_bound(s.elements.begin(), s.elements.end(), prod);
      table[i * n + j] = static_cast<Elem>(it - s.elements.begin());
    }
  return FiniteGroup(n, std::move(table), std::move(label));
}

/// Greedy small generating set: repeatedly add the element whose addition
/// gives the largest subgroup (ties to the smallest index).
std::vector<Elem> find_generators(const FiniteGroup& g);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Conjugacy classes, each sorted, listed by smallest element.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);
/// All normal subgroups, sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// Coset group G/H; coset k is the k-th coset in order of smallest element.
struct Quotient {
  FiniteGroup group;
  GroupMap projection;
};
/// Throws std::invalid_argument when h is not a normal subgroup.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& h);
inline FiniteGroup quotient(const FiniteGroup& g, const Subgroup& h) {
  return quotient_group(g, h).group;
}

// ---- automorphisms and isomorphism ----------------------------------------

/// Throws ResourceError when |G| exceeds `bound`.
AutomorphismGroup automorphism_group(const FiniteGroup& g, std::size_t bound = kVerifyBound);

/// Number of automorphisms, without building the carrier table.
std::size_t count_automorphisms(const FiniteGroup& g, std::size_t bound = kVerifyBound);

/// Cheap isomorphism invariants.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> order_histogram;  // count of elements per order 1..n
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> abelianization;   // invariant factors of G/G'
  std::vector<std::size_t> class_sizes;      // sorted conjugacy class sizes
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const FiniteGroup& g);

/// An isomorphism a -> b, or nullopt.
std::optional<GroupMap> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
inline bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

/// Invariant factors of an abelian group (descending). Throws for
/// non-abelian input.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);

/// One of "C12", "C6xC2", "A4", "D12", "Dic12". Throws for other orders.
std::string isomorphism_type_of_order12(const FiniteGroup& g);

/// Best-effort name: "1", abelian invariant factors ("C6xC2"), "D<2m>",
/// "Q8", the five order-12 names, else "G<n>" (not an isomorphism invariant
/// beyond the order in that last case).
std::string group_label(const FiniteGroup& g);

}  // namespace npbrace
