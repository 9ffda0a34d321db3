#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npbrace/brace.hpp"
#include "npbrace/holomorph.hpp"
#include "npbrace/tau.hpp"

namespace npbrace {

struct CountOptions {
  std::size_t threads = 1;
  std::size_t bound = kDefaultHolomorphBound;
};

/// Brace counts keyed by (additive type, multiplicative type). For censuses
/// of size np the multiplicative key is the type of F in Z_p x|_tau F.
struct BraceCensus {
  std::uint64_t n = 0;
  std::uint64_t p = 0;  // 0 for a direct census of braces of size n
  std::vector<std::string> additive_types;
  std::vector<std::string> multiplicative_types;
  std::map<std::pair<std::string, std::string>, std::size_t> rows;
  std::size_t total = 0;

  std::size_t at(const std::string& e, const std::string& f) const;
  std::vector<std::size_t> row(const std::string& e) const;
};

/// Braces of size np via the pair classification, one additive type
/// Z_p x E per abelian E of order n. Throws HypothesisError when
/// check_hypothesis(n, p) fails.
BraceCensus brace_count(std::uint64_t n, std::uint64_t p, const CountOptions& options = {});

/// Braces of size m as conjugacy classes of regular subgroups of Hol(N),
/// over every abelian N of order m. Throws ResourceError when a holomorph
/// exceeds the bound.
BraceCensus brace_count_bruteforce(std::uint64_t m, const CountOptions& options = {});

/// Regular subgroups (not classes) of Hol(E) by isomorphism type, for every
/// abelian E of order n.
BraceCensus regular_subgroup_table(std::uint64_t n, const CountOptions& options = {});

/// |S| = (p - 1) |S0|; throws std::invalid_argument for trivial tau.
std::uint64_t s_set_order(std::uint64_t p, const FiniteGroup& f, const TauMorphism& tau);
/// |Aut(Z_p x|_tau F)|: p (p - 1) |S0| for nontrivial tau, (p - 1) |Aut F| otherwise.
std::uint64_t aut_order_Gnp(std::uint64_t p, const FiniteGroup& f, const TauMorphism& tau);

/// The alpha-map in Hol(Z_p x E) of the pair (F, tau): (m, e) is paired with
/// (multiplication by tau(e)) x alpha_e. `hn` must be the holomorph of
/// direct_product(make_cyclic(p), he.base()).
AlphaMap pair_to_alpha(const HolomorphGroup& hn, const HolomorphGroup& he, const AlphaMap& f_alpha,
                       const TauMorphism& tau);

/// Byott's formula a(N, G) = |Aut G| / |Aut N| * b(N, G).
struct ByottCount {
  std::size_t b = 0;                    // regular subgroups of Hol(N) isomorphic to G
  std::optional<std::size_t> b_pairs;   // same, through the pair classes
  std::uint64_t aut_g = 0, aut_n = 0;
  std::uint64_t a = 0;
};
/// The pair route runs when |N| = np with p prime, p not dividing n and
/// check_hypothesis(n, p) (largest such p). Throws std::invalid_argument for
/// unequal orders or nonabelian N, and Error when the routes disagree.
ByottCount byott_count(const FiniteGroup& n, const FiniteGroup& g, const CountOptions& options = {});

/// One cell of a Hopf Galois table: G = Z_p x| F with the given kernel.
struct HgsCell {
  std::size_t b = 0;          // sum of pair-class orbit lengths
  std::size_t b_direct = 0;   // regular subgroups of Hol(N) isomorphic to G
  std::uint64_t aut_g = 0;    // from S0
  std::uint64_t aut_g_direct = 0;  // brute-force automorphism count
  std::uint64_t a = 0;
  std::uint64_t a_direct = 0;

  bool routes_agree() const { return b == b_direct && aut_g == aut_g_direct && a == a_direct; }
};

/// Hopf Galois structures of type N = Z_p x E, keyed by (F type, kernel
/// column). The column is "F" for the trivial morphism, otherwise the label
/// of the kernel; cells missing from `entries` are not applicable at this p.
struct HgsCensus {
  std::uint64_t p = 0;
  std::string e_label, n_label;
  std::uint64_t aut_n = 0;
  std::vector<std::string> rows;     // F types
  std::vector<std::string> columns;  // kernel columns
  std::map<std::pair<std::string, std::string>, HgsCell> entries;

  const HgsCell* cell(const std::string& f, const std::string& column) const;
  bool routes_agree() const;
};

/// `cross_check` additionally fills the direct-route fields.
HgsCensus hgs_table(std::uint64_t p, const FiniteGroup& e, bool cross_check = true,
                    const CountOptions& options = {});

/// Fixed display order for the order-12 groups; other labels follow in
/// order of appearance.
std::vector<std::string> order12_types();
/// Kernel column order: "F" first, then by decreasing order, cyclic first.
std::vector<std::string> sort_kernel_columns(std::vector<std::pair<std::size_t, std::string>> cols);

}  // namespace npbrace
