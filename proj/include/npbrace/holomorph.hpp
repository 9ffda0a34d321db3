#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npbrace/group.hpp"

namespace npbrace {

/// Default cap on |Hol(N)| for holomorph construction and searches.
inline constexpr std::size_t kDefaultHolomorphBound = 50000;

/// Hol(N) = N x| Aut(N) for abelian N, multiplied on the fly:
/// (x, a)(y, b) = (x + a(y), a b). The pair (x, a) has index x * |Aut N| + a,
/// where a is a carrier index of auts() (0 is the identity map).
class HolomorphGroup {
 public:
  HolomorphGroup(FiniteGroup base, AutomorphismGroup auts);

  std::size_t order() const { return order_; }
  Elem mul(Elem g, Elem h) const {
    const Elem x = g / aut_order_, a = g % aut_order_;
    const Elem y = h / aut_order_, b = h % aut_order_;
    return encode(base_.mul(x, auts_.apply(a, y)), auts_.carrier().mul(a, b));
  }
  Elem inv(Elem g) const;

  const FiniteGroup& base() const { return base_; }
  const AutomorphismGroup& auts() const { return auts_; }
  std::size_t aut_order() const { return aut_order_; }

  Elem encode(Elem x, Elem aut) const { return x * aut_order_ + aut; }
  std::pair<Elem, Elem> decode(Elem g) const { return {g / aut_order_, g % aut_order_}; }
  /// Action on N: (x, a) . z = x + a(z).
  Elem act(Elem g, Elem z) const;

  /// Cayley-table form; throws ResourceError above kVerifyBound.
  FiniteGroup group() const;

  Subgroup translations() const;
  /// The embedded Aut(N) = {(0, a)}.
  Subgroup automorphism_part() const;

 private:
  FiniteGroup base_;
  AutomorphismGroup auts_;
  Elem aut_order_;
  std::size_t order_;
};

/// Throws std::invalid_argument for nonabelian N and ResourceError when
/// |N| * |Aut N| exceeds `bound`.
HolomorphGroup holomorph(const FiniteGroup& n, std::size_t bound = kDefaultHolomorphBound);

/// A regular subgroup {(x, alpha[x]) : x in N}: alpha[x] is the carrier
/// index of the automorphism paired with x.
using AlphaMap = std::vector<Elem>;

Subgroup alpha_to_subgroup(const HolomorphGroup& h, const AlphaMap& alpha);
/// The alpha-map of a regular subgroup, or nullopt when `s` is not regular.
std::optional<AlphaMap> subgroup_to_alpha(const HolomorphGroup& h, const Subgroup& s);

/// True iff s is a subgroup of order |N| whose elements move 0 to distinct
/// points (trivial stabilizer, hence transitive).
bool is_regular(const HolomorphGroup& h, const Subgroup& s);

/// The group {(x, alpha[x])} transported to N's indices: x o y = x + alpha_x(y).
/// Element x of the result corresponds to (x, alpha[x]).
FiniteGroup regular_group(const HolomorphGroup& h, const AlphaMap& alpha);

/// Conjugation by nu in Aut(N): (x, a) -> (nu(x), nu a nu^-1).
AlphaMap conjugate_alpha(const HolomorphGroup& h, Elem nu, const AlphaMap& alpha);
Subgroup inner_conjugate(const HolomorphGroup& h, Elem nu, const Subgroup& s);

/// Automorphisms nu with nu F nu^-1 = F.
std::vector<Elem> normalizing_automorphisms(const HolomorphGroup& h, const AlphaMap& alpha);

struct RegularSearchOptions {
  std::size_t threads = 1;
  /// Generators of Aut(N) used for orbit computation (carrier indices);
  /// empty means a greedy generating set.
  std::vector<Elem> aut_generators;
};

/// Every alpha-map with alpha_0 = id and alpha_x alpha_y = alpha_{x + alpha_x(y)},
/// in lexicographic order.
std::vector<AlphaMap> enumerate_alpha_maps(const HolomorphGroup& h,
                                           const RegularSearchOptions& options = {});

/// All regular subgroups, sorted by element list.
std::vector<Subgroup> regular_subgroups(const HolomorphGroup& h,
                                        const RegularSearchOptions& options = {});

/// An Aut(N)-conjugacy class of regular subgroups.
struct RegularClass {
  Subgroup representative;          // lexicographically least member
  AlphaMap alpha;                   // alpha-map of the representative
  std::size_t orbit_length = 0;
  std::string iso_label;            // group_label of the representative
  std::vector<std::size_t> members; // indices into the sorted alpha-map list
  std::vector<Elem> witnesses;      // witnesses[i] maps the representative to members[i]
};

struct RegularClassification {
  std::vector<AlphaMap> subgroups;  // every regular subgroup, sorted
  std::vector<RegularClass> classes;  // sorted by representative
};

RegularClassification classify_regular_full(const HolomorphGroup& h,
                                            const RegularSearchOptions& options = {});
std::vector<RegularClass> classify_regular(const HolomorphGroup& h,
                                           const RegularSearchOptions& options = {});

}  // namespace npbrace
