#include <map>

#include "doctest.h"
#include "npbrace/counting.hpp"
#include "test_support.hpp"

using namespace npbrace;

namespace {

const std::size_t kC12[] = {12};
const std::size_t kC62[] = {6, 2};

using Row = std::vector<std::size_t>;

// Hopf Galois tables for types C12p and C6p x C2; columns
// F, C6, D6, C4, C2xC2, C3, C2, 1; entries "k" or "kp", "-" when not applicable.
const std::vector<std::string> kColumns{"F", "C6", "D6", "C4", "C2xC2", "C3", "C2", "1"};
const std::map<std::string, std::vector<std::string>> kHgsCyclic{
    {"C12", {"1", "p", "-", "p", "-", "p", "p", "p"}},
    {"C6xC2", {"3", "3p", "-", "-", "3p", "-", "3p", "-"}},
    {"A4", {"0", "-", "-", "-", "0", "-", "-", "-"}},
    {"D12", {"9", "9p", "9p", "-", "-", "-", "-", "-"}},
    {"Dic12", {"3", "3p", "-", "-", "-", "3p", "-", "-"}}};
const std::map<std::string, std::vector<std::string>> kHgsNoncyclic{
    {"C12", {"1", "p", "-", "p", "-", "p", "p", "p"}},
    {"C6xC2", {"1", "p", "-", "-", "p", "-", "p", "-"}},
    {"A4", {"4", "-", "-", "-", "4p", "-", "-", "-"}},
    {"D12", {"3", "3p", "3p", "-", "-", "-", "-", "-"}},
    {"Dic12", {"3", "3p", "-", "-", "-", "3p", "-", "-"}}};

std::uint64_t instantiate(const std::string& entry, std::uint64_t p) {
  if (entry == "p") return p;
  if (entry.back() == 'p') return std::stoull(entry.substr(0, entry.size() - 1)) * p;
  return std::stoull(entry);
}

std::size_t column_kernel_index(const std::string& col) {
  static const std::map<std::string, std::size_t> index{{"F", 1},     {"C6", 2}, {"D6", 2}, {"C4", 3},
                                                        {"C2xC2", 3}, {"C3", 4}, {"C2", 6}, {"1", 12}};
  return index.at(col);
}

void check_hgs(const HgsCensus& census, const std::map<std::string, std::vector<std::string>>& expected) {
  CHECK(census.routes_agree());
  for (const auto& [f, entries] : expected)
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      CAPTURE(f);
      CAPTURE(kColumns[i]);
      const auto* cell = census.cell(f, kColumns[i]);
      if (entries[i] == "-") {
        CHECK(cell == nullptr);
      } else if (cell == nullptr) {
        // the generic entry needs a quotient of this order inside Z_p^*
        CHECK((census.p - 1) % column_kernel_index(kColumns[i]) != 0);
      } else {
        CHECK(cell->a == instantiate(entries[i], census.p));
        if (kColumns[i] != "F") CHECK(cell->a % census.p == 0);
      }
    }
}

TauMorphism tau_with_kernel(const std::vector<TauMorphism>& taus, const FiniteGroup& f,
                                   std::size_t order) {
  for (const auto& t : taus)
    if (kernel_of(f, t).subgroup.order() == order) return t;
  throw std::logic_error("no morphism with that kernel");
}

}  // namespace

TEST_CASE("hypothesis check") {
  CHECK_FALSE(check_hypothesis(12, 5));
  CHECK(check_hypothesis(12, 7));
  CHECK_FALSE(check_hypothesis(8, 7));
  CHECK(check_hypothesis(12, 11));
  CHECK(check_hypothesis(12, 13));
  CHECK(check_hypothesis(12, 17));
  CHECK_FALSE(check_hypothesis(12, 3));  // p divides n
  for (std::uint64_t p : {13u, 17u, 19u, 23u}) CHECK(check_hypothesis(12, p));
  CHECK_FALSE(hypothesis_diagnostic(12, 5).empty());
  CHECK(hypothesis_diagnostic(12, 7).empty());
}

TEST_CASE("brace counts of size 12p") {
  struct Expected {
    std::uint64_t p;
    Row c12, c62;
    std::size_t total;
  };
  for (const auto& ex : {Expected{11, {2, 3, 0, 7, 2}, {2, 2, 1, 3, 2}, 24},
                         Expected{17, {3, 3, 0, 7, 3}, {3, 2, 1, 3, 3}, 28},
                         Expected{7, {4, 6, 0, 7, 2}, {4, 4, 2, 3, 2}, 34},
                         Expected{13, {6, 6, 0, 7, 3}, {6, 4, 2, 3, 3}, 40}}) {
    CAPTURE(ex.p);
    auto census = brace_count(12, ex.p);
    CHECK(census.multiplicative_types == order12_types());
    CHECK(census.row("C12") == ex.c12);
    CHECK(census.row("C6xC2") == ex.c62);
    CHECK(census.total == ex.total);
  }
  CHECK_THROWS_AS(brace_count(12, 5), HypothesisError);
}

TEST_CASE("residue-class stability") {
  for (auto [p, q] : {std::pair{7u, 19u}, std::pair{13u, 37u}, std::pair{11u, 23u}, std::pair{17u, 29u}}) {
    CAPTURE(p);
    CHECK(brace_count(12, p).rows == brace_count(12, q).rows);
  }
}

TEST_CASE("brute-force brace counts") {
  auto b12 = brace_count_bruteforce(12);
  CHECK(b12.total == 10);
  CHECK(b12.row("C12") == Row{1, 1, 0, 2, 1});
  CHECK(b12.row("C6xC2") == Row{1, 1, 1, 1, 1});
  CHECK(brace_count_bruteforce(24).total == 96);
  CHECK(brace_count_bruteforce(60).total == 28);
  CHECK(brace_count_bruteforce(7).total == 1);
  CHECK(brace_count_bruteforce(4).total == 4);

  auto reg = regular_subgroup_table(12);
  CHECK(reg.row("C12") == Row{1, 1, 0, 3, 1});
  CHECK(reg.row("C6xC2") == Row{3, 1, 2, 3, 3});
}

TEST_CASE("automorphism orders of Z_p x| F") {
  auto c12 = make_abelian(kC12);
  auto t11 = enumerate_tau(c12, 11);
  const auto k6 = tau_with_kernel(t11, c12, 6);
  CHECK(s_set_order(11, c12, k6) == 40);
  CHECK(count_automorphisms(tau_semidirect(c12, k6)) == 11 * 40);
  CHECK_THROWS_AS(s_set_order(11, c12, trivial_tau(c12, 11)), std::invalid_argument);

  auto a4 = make_alternating4();
  const auto v4 = tau_with_kernel(enumerate_tau(a4, 13), a4, 4);
  CHECK(s_set_order(13, a4, v4) == 144);
  CHECK(count_automorphisms(tau_semidirect(a4, v4)) == 13 * 144);

  auto d12 = make_dihedral(12);
  for (const auto& tau : enumerate_tau(d12, 7)) {
    auto k = kernel_of(d12, tau);
    if (k.label == "C6") CHECK(aut_order_Gnp(7, d12, tau) == 504);
    CHECK(aut_order_Gnp(7, d12, tau) == count_automorphisms(tau_semidirect(d12, tau)));
  }
  CHECK(aut_order_Gnp(7, c12, trivial_tau(c12, 7)) == 24);
  CHECK(count_automorphisms(make_cyclic(84)) == euler_phi(84));

  auto dic = make_dicyclic(12);
  const auto k3 = tau_with_kernel(enumerate_tau(dic, 13), dic, 3);
  CHECK(aut_order_Gnp(13, dic, k3) == count_automorphisms(tau_semidirect(dic, k3)));
  CHECK(aut_order_Gnp(13, dic, k3) == 13 * 12 * 6);
}

TEST_CASE("pairs lift to regular subgroups of Hol(Z_p x E)") {
  for (const auto& e : {make_abelian(kC12), make_abelian(kC62)}) {
    auto pairs = classify_pairs_full(e, 7);
    auto he = holomorph(e);
    auto hn = holomorph(direct_product(make_cyclic(7), e));
    auto big = classify_regular_full(hn);
    std::vector<std::size_t> class_of(big.subgroups.size());
    for (std::size_t c = 0; c < big.classes.size(); ++c)
      for (auto m : big.classes[c].members) class_of[m] = c;

    std::set<std::size_t> hit;
    for (const auto& cls : pairs.classes) {
      const auto& f_alpha = pairs.regular.classes[cls.f_class].alpha;
      auto alpha = pair_to_alpha(hn, he, f_alpha, cls.tau);
      auto it = std::lower_bound(big.subgroups.begin(), big.subgroups.end(), alpha);
      REQUIRE(it != big.subgroups.end());
      REQUIRE(*it == alpha);
      const auto c = class_of[it - big.subgroups.begin()];
      CHECK(big.classes[c].orbit_length == cls.holomorph_orbit_length());
      CHECK(hit.insert(c).second);
      auto f = regular_group(he, f_alpha);
      CHECK(are_isomorphic(regular_group(hn, alpha), tau_semidirect(f, cls.tau)));
    }
    CHECK(hit.size() == big.classes.size());
  }
}

TEST_CASE("Byott counts") {
  auto c12 = make_abelian(kC12);
  auto d12 = make_dihedral(12);
  std::optional<FiniteGroup> g;
  for (const auto& tau : enumerate_tau(d12, 7))
    if (kernel_of(d12, tau).label == "C6") g = tau_semidirect(d12, tau);
  REQUIRE(g);
  auto r = byott_count(make_cyclic(84), *g);
  CHECK(r.a == 63);
  REQUIRE(r.b_pairs);
  CHECK(*r.b_pairs == r.b);

  auto a4 = make_alternating4();
  auto v4 = tau_with_kernel(enumerate_tau(a4, 13), a4, 4);
  const std::size_t f782[] = {78, 2};
  auto r2 = byott_count(make_abelian(f782), tau_semidirect(a4, v4));
  CHECK(r2.a == 52);
  CHECK(r2.b_pairs == r2.b);

  CHECK(byott_count(make_cyclic(84), make_cyclic(84)).a == 1);
  CHECK_THROWS_AS(byott_count(make_cyclic(84), make_cyclic(12)), std::invalid_argument);
  CHECK_THROWS_AS(byott_count(d12, c12), std::invalid_argument);
}

TEST_CASE("Hopf Galois tables") {
  for (std::uint64_t p : {7u, 13u}) {
    CAPTURE(p);
    auto cyc = hgs_table(p, make_abelian(kC12));
    CHECK(cyc.n_label == "C" + std::to_string(12 * p));
    CHECK(cyc.aut_n == (p - 1) * 4);
    check_hgs(cyc, kHgsCyclic);
    auto noncyc = hgs_table(p, make_abelian(kC62));
    CHECK(noncyc.aut_n == (p - 1) * 12);
    check_hgs(noncyc, kHgsNoncyclic);
  }
  auto at11 = hgs_table(11, make_abelian(kC12), false);
  CHECK(at11.cell("A4", "F")->a == 0);
  CHECK(at11.cell("A4", "C2xC2") == nullptr);
  CHECK(at11.rows == order12_types());
  CHECK(sort_kernel_columns({{1, "1"}, {4, "C2xC2"}, {12, "F"}, {4, "C4"}, {6, "D6"}, {6, "C6"}}) ==
        std::vector<std::string>{"F", "C6", "D6", "C4", "C2xC2", "1"});
}
