#include <random>

#include "doctest.h"
#include "npbrace/group.hpp"
#include "test_support.hpp"

using namespace npbrace;
using npbrace::testing::naive_closure;
using npbrace::testing::relabel;
using npbrace::testing::unit_permutation;

namespace {

std::vector<FiniteGroup> order12_groups() {
  const std::size_t c62[] = {6, 2};
  return {make_cyclic(12), make_abelian(c62), make_alternating4(), make_dihedral(12),
          make_dicyclic(12)};
}

FiniteGroup symmetric4() {
  const std::vector<Permutation> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
  return from_permutations(gens, "S4");
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto c1 = make_cyclic(1);
  CHECK(c1.order() == 1);
  auto c12 = make_cyclic(12);
  CHECK(c12.is_abelian());
  CHECK(element_order(c12, 1) == 12);
  CHECK(element_order(c12, 0) == 1);
  CHECK(element_order(c12, 4) == 3);
  CHECK(automorphism_group(c12).order() == 4);
}

TEST_CASE("table validation rejects non-groups") {
  // identity not at 0
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), std::invalid_argument);
  // not Latin
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), std::invalid_argument);
  // a Latin square with identity that is not associative (order 5 loop)
  std::vector<Elem> loop = {0, 1, 2, 3, 4,  //
                            1, 0, 3, 4, 2,  //
                            2, 4, 0, 1, 3,  //
                            3, 2, 4, 0, 1,  //
                            4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), std::invalid_argument);
}

TEST_CASE("light's test catches non-associative large loops") {
  // Z_70 with two entries of a 2x2 intercalate swapped stays Latin but
  // breaks associativity.
  const std::size_t n = 70;
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  // rows 1,36 and columns 1,36 form an intercalate {2, 37 / 37, 2}
  std::swap(t[1 * n + 1], t[1 * n + 36]);
  std::swap(t[36 * n + 1], t[36 * n + 36]);
  CHECK_THROWS_AS(FiniteGroup(n, t), std::invalid_argument);
}

TEST_CASE("direct products") {
  const std::size_t c62[] = {6, 2};
  auto e = make_abelian(c62);
  CHECK(e.order() == 12);
  CHECK(e.is_abelian());
  std::size_t exponent = 1;
  for (Elem x = 0; x < 12; ++x) exponent = std::lcm(exponent, element_order(e, x));
  CHECK(exponent == 6);

  auto b = make_dihedral(12);
  CHECK(are_isomorphic(direct_product(make_cyclic(1), b), b));

  auto z7 = make_cyclic(7);
  const std::size_t c12[] = {12};
  auto n1 = direct_product(z7, make_abelian(c12));
  auto n2 = direct_product(z7, e);
  CHECK(n1.order() == 84);
  CHECK_FALSE(are_isomorphic(n1, n2));
  CHECK(abelian_invariants(n1) == std::vector<std::size_t>{84});
  CHECK(abelian_invariants(n2) == std::vector<std::size_t>{42, 2});
}

TEST_CASE("abelian types") {
  CHECK(abelian_types(12) == std::vector<std::vector<std::size_t>>{{12}, {6, 2}});
  CHECK(abelian_types(24).size() == 3);
  CHECK(abelian_types(36).size() == 4);
  CHECK(abelian_types(60).size() == 2);
  CHECK(abelian_types(1).size() == 1);
}

TEST_CASE("semidirect products") {
  auto z7 = make_cyclic(7);
  auto c12 = make_cyclic(12);

  SUBCASE("trivial action gives the direct product") {
    std::vector<Permutation> act(12, unit_permutation(7, 1));
    auto g = semidirect_product(z7, c12, act);
    auto d = direct_product(z7, c12);
    auto iso = find_isomorphism(g, d);
    REQUIRE(iso.has_value());
    CHECK(iso->is_homomorphism());
    CHECK(iso->is_bijective());
  }

  SUBCASE("Z7 x| C12 with kernel of order 6 is nonabelian") {
    std::vector<Permutation> act;
    for (std::size_t i = 0; i < 12; ++i) act.push_back(unit_permutation(7, i % 2 ? 6 : 1));
    auto g = semidirect_product(z7, c12, act);
    CHECK(g.order() == 84);
    // brute-force center
    std::size_t central = 0;
    for (Elem z = 0; z < 84; ++z) {
      bool ok = true;
      for (Elem x = 0; x < 84 && ok; ++x) ok = g.mul(z, x) == g.mul(x, z);
      central += ok;
    }
    CHECK(central < 84);
    CHECK(center(g).order() == central);
  }

  SUBCASE("Z13 x| A4 with kernel V4 has abelianization of order 3") {
    auto a4 = make_alternating4();
    Subgroup v4;
    for (Elem x = 0; x < 12; ++x)
      if (element_order(a4, x) <= 2) v4.elements.push_back(x);
    REQUIRE(v4.order() == 4);
    Elem c = 0;
    for (Elem x = 0; x < 12 && c == 0; ++x)
      if (element_order(a4, x) == 3) c = x;
    std::vector<Permutation> act(12);
    for (Elem f = 0; f < 12; ++f) {
      Elem cj = 0;
      for (std::size_t j = 0; j < 3; ++j, cj = a4.mul(cj, c))
        if (v4.contains(a4.mul(a4.inv(cj), f))) act[f] = unit_permutation(13, j == 0 ? 1 : j == 1 ? 3 : 9);
    }
    auto g = semidirect_product(make_cyclic(13), a4, act);
    CHECK(g.order() == 156);
    std::set<Elem> comms;
    for (Elem a = 0; a < 156; ++a)
      for (Elem b = 0; b < 156; ++b)
        comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    auto derived = naive_closure(g, comms);
    CHECK(156 / derived.size() == 3);
    CHECK(derived_subgroup(g).order() == derived.size());
  }

  SUBCASE("invalid actions are rejected") {
    std::vector<Permutation> act(12, unit_permutation(7, 1));
    act[1] = unit_permutation(7, 2);  // 2 has order 3 mod 7, but 1 has order 12 in C12
    CHECK_THROWS_AS(semidirect_product(z7, c12, act), std::invalid_argument);
    act[1] = Permutation{0, 2, 1, 3, 4, 5, 6};  // not an automorphism
    CHECK_THROWS_AS(semidirect_product(z7, c12, act), std::invalid_argument);
  }

  SUBCASE("action given as a map into the automorphism group") {
    auto auts = automorphism_group(z7);
    auto six = *auts.index_of(unit_permutation(7, 6));
    GroupMap act{c12, auts.carrier(), std::vector<Elem>(12)};
    for (Elem i = 0; i < 12; ++i) act.images[i] = i % 2 ? six : 0;
    CHECK(semidirect_product(z7, c12, auts, act).order() == 84);
    act.images[1] = 0;
    CHECK_THROWS_AS(semidirect_product(z7, c12, auts, act), std::invalid_argument);
  }
}

TEST_CASE("generated subgroups and element orders") {
  auto d12 = make_dihedral(12);
  CHECK(subgroup_generated(d12, std::span<const Elem>{}).elements == std::vector<Elem>{0});
  CHECK(subgroup_generated(d12, {1}).order() == 6);
  CHECK(subgroup_generated(d12, {1, 6}).order() == 12);
  CHECK(element_order(d12, 6) == 2);
  for (Elem x = 0; x < 12; ++x) CHECK(12 % element_order(d12, x) == 0);
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(make_alternating4()).size() == 3);
  CHECK(normal_subgroups(make_cyclic(12)).size() == 6);

  auto d12 = make_dihedral(12);  // r = 1, s = 6, r^i s = 6 + i
  auto normals = normal_subgroups(d12);
  const Elem r = 1, s = 6, r2 = 2, rs = 7;
  for (auto gens : {std::vector<Elem>{r}, std::vector<Elem>{r2, rs}, std::vector<Elem>{r2, s}}) {
    auto h = subgroup_generated(d12, gens);
    CHECK(h.order() == 6);
    CHECK(std::find(normals.begin(), normals.end(), h) != normals.end());
  }
  for (const auto& h : normals) CHECK(is_normal(d12, h));
}

TEST_CASE("quotients") {
  auto c12 = make_cyclic(12);
  CHECK(quotient(c12, whole_group(c12)).order() == 1);
  auto q = quotient_group(c12, subgroup_generated(c12, {2}));
  CHECK(q.group.order() == 2);
  CHECK(q.projection.is_homomorphism());

  auto d12 = make_dihedral(12);
  auto rot = subgroup_generated(d12, {1});
  auto dq = quotient_group(d12, rot);
  CHECK(dq.group.order() * rot.order() == d12.order());
  CHECK(dq.projection.is_homomorphism());

  CHECK_THROWS_AS(quotient_group(d12, subgroup_generated(d12, {6})), std::invalid_argument);
}

TEST_CASE("automorphism groups") {
  auto groups = order12_groups();
  auto d12 = make_dihedral(12);

  auto aut_c12 = automorphism_group(groups[0]);
  CHECK(aut_c12.order() == 4);
  for (Elem a = 0; a < 4; ++a) CHECK(element_order(aut_c12.carrier(), a) <= 2);
  // carrier indices follow the units 1, 5, 7, 11
  for (Elem a = 0; a < 4; ++a) CHECK(aut_c12.apply(a, 1) == std::vector<Elem>{1, 5, 7, 11}[a]);

  auto aut_e = automorphism_group(groups[1]);
  CHECK(aut_e.order() == 12);
  CHECK(are_isomorphic(aut_e.carrier(), d12));

  auto aut_a4 = automorphism_group(groups[2]);
  CHECK(aut_a4.order() == 24);
  CHECK(are_isomorphic(aut_a4.carrier(), symmetric4()));

  auto aut_dic = automorphism_group(groups[4]);
  CHECK(aut_dic.order() == 12);
  CHECK(are_isomorphic(aut_dic.carrier(), d12));

  // faithfulness: distinct permutations, one per carrier element, identity first
  for (const auto& g : groups) {
    auto aut = automorphism_group(g);
    std::set<Permutation> distinct(aut.action().begin(), aut.action().end());
    CHECK(distinct.size() == aut.carrier().order());
    for (Elem x = 0; x < g.order(); ++x) CHECK(aut.apply(0, x) == x);
    CHECK(count_automorphisms(g) == aut.order());
  }
}

TEST_CASE("automorphism search against a naive two-generator oracle") {
  auto d12 = make_dihedral(12);
  CHECK(count_automorphisms(d12) ==
        npbrace::testing::naive_aut_count_2gen(d12, 1, 6));
  auto dic = make_dicyclic(12);  // a = 2 (order 6), x = 1 (order 4)
  CHECK(count_automorphisms(dic) == npbrace::testing::naive_aut_count_2gen(dic, 2, 1));
}

TEST_CASE("automorphism group respects the resource bound") {
  CHECK_THROWS_AS(automorphism_group(make_cyclic(12), 10), ResourceError);
}

TEST_CASE("isomorphism testing") {
  auto groups = order12_groups();
  CHECK_FALSE(are_isomorphic(groups[3], groups[4]));
  CHECK_FALSE(are_isomorphic(groups[0], groups[1]));
  CHECK_FALSE(are_isomorphic(make_cyclic(12), make_cyclic(13)));

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t i = rng() % 5, j = rng() % 5;
    auto a = relabel(groups[i], rng);
    auto b = relabel(groups[j], rng);
    auto iso = find_isomorphism(a, b);
    CHECK(iso.has_value() == (isomorphism_type_of_order12(a) == isomorphism_type_of_order12(b)));
    CHECK((isomorphism_type_of_order12(a) == groups[i].label()));
    if (iso) {
      CHECK(iso->is_homomorphism());
      CHECK(iso->is_bijective());
    }
  }
}

TEST_CASE("order-12 labels") {
  std::vector<std::string> expected{"C12", "C6xC2", "A4", "D12", "Dic12"};
  auto groups = order12_groups();
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(isomorphism_type_of_order12(groups[i]) == expected[i]);
    CHECK(group_label(groups[i]) == expected[i]);
  }
  CHECK_THROWS_AS(isomorphism_type_of_order12(make_cyclic(6)), std::invalid_argument);
  CHECK(group_label(make_dihedral(6)) == "D6");
  CHECK(group_label(make_dicyclic(8)) == "Q8");
  CHECK(group_label(make_dihedral(8)) == "D8");
  CHECK(group_label(make_cyclic(1)) == "1");
  const std::size_t c22[] = {2, 2};
  CHECK(group_label(make_abelian(c22)) == "C2xC2");
}

TEST_CASE("number theory helpers") {
  CHECK(unit_of_order(13, 1) == 1);
  CHECK(unit_of_order(13, 2) == 12);
  CHECK(unit_of_order(7, 2) == 6);
  // oracle: 5^2 = 25 = 12 = -1 mod 13, so 5 has order 4; 2..4 do not
  CHECK(power_mod(5, 2, 13) == 12);
  CHECK(unit_order(2, 13) == 12);
  CHECK(unit_order(3, 13) == 3);
  CHECK(unit_order(4, 13) == 6);
  CHECK(unit_of_order(13, 4) == 5);
  CHECK_THROWS_AS(unit_of_order(13, 5), std::invalid_argument);
  CHECK(euler_phi(84) == 24);
}
