#pragma once

#include <optional>
#include <span>
#include <vector>

#include "npbrace/group.hpp"
#include "npbrace/holomorph.hpp"
#include "npbrace/tau.hpp"

namespace npbrace {

/// Left brace: an abelian group `add` and a group `mul` on the same indices
/// (0 is both zero and identity) with a(b + c) = ab - a + ac.
class LeftBrace {
 public:
  /// Throws std::invalid_argument when the orders differ, `add` is not
  /// abelian or the brace relation fails.
  LeftBrace(FiniteGroup add, FiniteGroup mul);
  /// The one-element brace.
  LeftBrace() = default;

  std::size_t order() const { return add_.order(); }
  const FiniteGroup& add() const { return add_; }
  const FiniteGroup& mul() const { return mul_; }

  Elem plus(Elem a, Elem b) const { return add_.mul(a, b); }
  Elem minus(Elem a) const { return add_.inv(a); }
  Elem times(Elem a, Elem b) const { return mul_.mul(a, b); }
  /// lambda_a(b) = -a + ab.
  Elem lambda(Elem a, Elem b) const { return add_.mul(add_.inv(a), mul_.mul(a, b)); }

  bool is_trivial() const;

  /// Same tables; isomorphism is find_brace_isomorphism.
  friend bool operator==(const LeftBrace&, const LeftBrace&) = default;

 private:
  FiniteGroup add_, mul_;
};

/// True iff a(b + c) = ab - a + ac for all a, b, c. Decided exactly by
/// checking that every lambda_a is additive on a generating set of `add`.
bool satisfies_brace_relation(const FiniteGroup& add, const FiniteGroup& mul);

/// Map given by the image of every element.
struct BraceMap {
  LeftBrace domain, codomain;
  Permutation images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_morphism() const;
  bool is_isomorphism() const;
};

LeftBrace trivial_brace(std::size_t n);

/// The brace on N with x o y = x + alpha_x(y). Throws std::invalid_argument
/// unless `r` is a regular subgroup of h.
LeftBrace brace_from_regular(const HolomorphGroup& h, const Subgroup& r);
LeftBrace brace_from_alpha(const HolomorphGroup& h, const AlphaMap& alpha);

/// The regular subgroup of Hol(B, +) attached to a brace: alpha_x = lambda_x.
/// `h` must be the holomorph of an additive group identical to b.add().
AlphaMap brace_to_alpha(const HolomorphGroup& h, const LeftBrace& b);

std::optional<BraceMap> find_brace_isomorphism(const LeftBrace& a, const LeftBrace& b);
inline bool braces_isomorphic(const LeftBrace& a, const LeftBrace& b) {
  return find_brace_isomorphism(a, b).has_value();
}

/// Maps that are both additive and multiplicative automorphisms.
std::vector<Permutation> brace_automorphisms(const LeftBrace& b);

/// Element (a, b) has index a * |B2| + b.
LeftBrace direct_product_brace(const LeftBrace& b1, const LeftBrace& b2);

/// Additive group B1 x B2, product (a, b)(a', b') = (a tau_b(a'), b b');
/// `tau[b]` must be a brace automorphism of b1 and b -> tau[b] a morphism
/// from (B2, o). Throws std::invalid_argument otherwise.
LeftBrace semidirect_product_brace(const LeftBrace& b1, const LeftBrace& b2,
                                   std::span<const Permutation> tau);
/// trivial_brace(p) x|_tau b2, with tau defined on b2's multiplicative group.
LeftBrace semidirect_product_brace(const LeftBrace& b2, const TauMorphism& tau);

struct NpDecomposition {
  std::uint64_t p = 0;
  TauMorphism tau;               // on the multiplicative group of `complement`
  LeftBrace complement;          // size n
  std::vector<Elem> embedding;   // complement element -> element of the input
  Elem p_generator = 0;          // additive generator of the order-p part
};

/// Splits a brace of size np (p prime, p not dividing n) as
/// trivial_brace(p) x|_tau B'. Throws HypothesisError when
/// check_hypothesis(n, p) fails and Error if the input does not split
/// along its additive primary parts.
NpDecomposition decompose_np_brace(const LeftBrace& b, std::uint64_t p);

/// The isomorphism semidirect_product_brace(d.complement, d.tau) -> b,
/// (i, k) -> i * p_generator + embedding[k].
BraceMap recomposition_map(const LeftBrace& b, const NpDecomposition& d);

}  // namespace npbrace
