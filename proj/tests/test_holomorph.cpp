#include <map>
#include <set>

#include "doctest.h"
#include "npbrace/holomorph.hpp"
#include "test_support.hpp"

using namespace npbrace;

namespace {

const std::size_t kC12[] = {12};
const std::size_t kC62[] = {6, 2};

// Hol(Z_12) element (x, l) with l one of the units 1, 5, 7, 11; carrier
// indices of Aut(Z_12) follow that order.
Elem hol12(const HolomorphGroup& h, Elem x, Elem unit) {
  const Elem idx = unit == 1 ? 0 : unit == 5 ? 1 : unit == 7 ? 2 : 3;
  REQUIRE(h.auts().apply(idx, 1) == unit);
  return h.encode(x % 12, idx);
}

std::map<std::string, std::size_t> count_by_label(const HolomorphGroup& h) {
  std::map<std::string, std::size_t> counts;
  for (const auto& alpha : enumerate_alpha_maps(h)) ++counts[regular_group(h, alpha).label()];
  return counts;
}

}  // namespace

TEST_CASE("holomorph orders and structure") {
  auto h12 = holomorph(make_abelian(kC12));
  CHECK(h12.order() == 48);
  auto h62 = holomorph(make_abelian(kC62));
  CHECK(h62.order() == 144);
  auto big = holomorph(direct_product(make_cyclic(7), make_abelian(kC12)));
  CHECK(big.order() == 84 * 24);
  CHECK(big.aut_order() == euler_phi(84));

  CHECK_THROWS_AS(holomorph(make_dihedral(12)), std::invalid_argument);
  CHECK_THROWS_AS(holomorph(make_abelian(kC62), 100), ResourceError);

  // the tabulated group agrees with the pair product
  auto g = h12.group();
  for (Elem a = 0; a < 48; ++a)
    for (Elem b = 0; b < 48; ++b) CHECK(g.mul(a, b) == h12.mul(a, b));

  // (x, l)(y, m) = (x + l y, l m)
  for (Elem x : {1u, 5u, 9u})
    for (Elem y : {2u, 7u})
      CHECK(h12.mul(hol12(h12, x, 5), hol12(h12, y, 7)) == hol12(h12, x + 5 * y, 11));

  auto t = h12.translations();
  CHECK(is_subgroup(h12, t));
  CHECK(is_normal(g, t));
  CHECK(is_regular(h12, t));
  CHECK_FALSE(is_regular(h12, h12.automorphism_part()));
}

TEST_CASE("named subgroups of Hol(C12)") {
  auto h = holomorph(make_abelian(kC12));
  auto g = h.group();

  auto f_c62 = subgroup_generated(h, {hol12(h, 2, 1), hol12(h, 3, 7)});
  CHECK(f_c62.order() == 12);
  CHECK(isomorphism_type_of_order12(subgroup_as_group(h, f_c62)) == "C6xC2");

  auto f_dic = subgroup_generated(h, {hol12(h, 4, 1), hol12(h, 1, 5)});
  CHECK(f_dic.order() == 12);
  CHECK(isomorphism_type_of_order12(subgroup_as_group(h, f_dic)) == "Dic12");
  CHECK(element_order(h, hol12(h, 1, 5)) == 4);
  CHECK(element_order(g, hol12(h, 1, 5)) == 4);
  CHECK(is_regular(h, f_dic));

  auto f1 = subgroup_generated(h, {hol12(h, 2, 1), hol12(h, 1, 11)});
  CHECK(is_regular(h, f1));
  CHECK(are_isomorphic(subgroup_as_group(h, f1), make_dihedral(12)));
  auto f2 = subgroup_generated(h, {hol12(h, 1, 7), hol12(h, 3, 11)});
  CHECK(is_regular(h, f2));
  CHECK(are_isomorphic(subgroup_as_group(h, f2), make_dihedral(12)));
  CHECK(is_normal(g, f1));
  CHECK_FALSE(is_normal(g, f2));

  // conjugating F2 by the automorphisms of C12 reaches <(7,7),(9,11)>
  auto f2_prime = subgroup_generated(h, {hol12(h, 7, 7), hol12(h, 9, 11)});
  bool reached = false;
  for (Elem nu = 0; nu < 4; ++nu) {
    auto c = inner_conjugate(h, nu, f2);
    CHECK(c.order() == 12);
    CHECK(is_regular(h, c));
    reached = reached || c == f2_prime;
  }
  CHECK(reached);
  CHECK(inner_conjugate(h, 0, f2) == f2);
  for (Elem nu = 0; nu < 4; ++nu) CHECK(inner_conjugate(h, nu, h.translations()) == h.translations());
}

TEST_CASE("regular subgroups of the order-12 holomorphs") {
  auto h12 = holomorph(make_abelian(kC12));
  auto c12 = count_by_label(h12);
  CHECK(c12["C12"] == 1);
  CHECK(c12["C6xC2"] == 1);
  CHECK(c12["A4"] == 0);
  CHECK(c12["D12"] == 3);
  CHECK(c12["Dic12"] == 1);

  auto h62 = holomorph(make_abelian(kC62));
  auto c62 = count_by_label(h62);
  CHECK(c62["C12"] == 3);
  CHECK(c62["C6xC2"] == 1);
  CHECK(c62["A4"] == 2);
  CHECK(c62["D12"] == 3);
  CHECK(c62["Dic12"] == 3);

  CHECK(regular_subgroups(holomorph(make_cyclic(2))).size() == 1);
  CHECK(regular_subgroups(holomorph(make_cyclic(1))).size() == 1);
}

TEST_CASE("alpha-map enumeration matches a brute-force subgroup oracle") {
  // Oracle: grow semiregular subgroups (trivial stabilizer of 0) one
  // element at a time from the tabulated holomorph, using naive closure.
  for (auto factors : std::vector<std::vector<std::size_t>>{{4}, {2, 2}, {6}, {8}, {4, 2}}) {
    auto h = holomorph(make_abelian(factors));
    auto g = h.group();
    const std::size_t n = h.base().order();
    auto semiregular = [&](const std::set<Elem>& s) {
      std::set<Elem> images;
      for (Elem e : s) images.insert(h.act(e, 0));
      return images.size() == s.size();
    };
    std::set<std::set<Elem>> layer{{0}}, seen{{0}};
    std::set<Subgroup> oracle;
    while (!layer.empty()) {
      std::set<std::set<Elem>> next;
      for (const auto& s : layer) {
        if (s.size() == n) {
          oracle.insert(Subgroup{std::vector<Elem>(s.begin(), s.end())});
          continue;
        }
        for (Elem a = 0; a < h.order(); ++a) {
          if (s.count(a)) continue;
          auto grown = s;
          grown.insert(a);
          grown = testing::naive_closure(g, grown);
          if (grown.size() <= n && semiregular(grown) && seen.insert(grown).second)
            next.insert(grown);
        }
      }
      layer = std::move(next);
    }
    auto found = regular_subgroups(h);
    CHECK(std::set<Subgroup>(found.begin(), found.end()) == oracle);
    CHECK(found.size() == oracle.size());
    for (const auto& s : found) {
      CHECK(is_subgroup(h, s));
      CHECK(is_regular(h, s));
    }
  }
}

TEST_CASE("alpha-maps satisfy the cocycle identity") {
  auto h = holomorph(make_abelian(kC62));
  const auto& carrier = h.auts().carrier();
  for (const auto& alpha : enumerate_alpha_maps(h)) {
    CHECK(alpha[0] == 0);
    for (Elem x = 0; x < 12; ++x)
      for (Elem y = 0; y < 12; ++y)
        CHECK(carrier.mul(alpha[x], alpha[y]) ==
              alpha[h.base().mul(x, h.auts().apply(alpha[x], y))]);
  }
}

TEST_CASE("parallel enumeration is schedule independent") {
  auto h = holomorph(make_abelian(kC62));
  RegularSearchOptions opts;
  opts.threads = 3;
  CHECK(enumerate_alpha_maps(h, opts) == enumerate_alpha_maps(h));
}

TEST_CASE("conjugacy classes of regular subgroups") {
  auto h12 = holomorph(make_abelian(kC12));
  auto full = classify_regular_full(h12);
  std::map<std::string, std::vector<std::size_t>> lengths;
  for (const auto& cls : full.classes) lengths[cls.iso_label].push_back(cls.orbit_length);
  for (auto& [label, v] : lengths) std::sort(v.begin(), v.end());
  CHECK(lengths["D12"] == std::vector<std::size_t>{1, 2});
  CHECK(lengths["Dic12"] == std::vector<std::size_t>{1});

  auto h62 = holomorph(make_abelian(kC62));
  auto classes62 = classify_regular(h62);
  std::size_t dic = 0;
  for (const auto& cls : classes62)
    if (cls.iso_label == "Dic12") {
      ++dic;
      CHECK(cls.orbit_length == 3);
    }
  CHECK(dic == 1);

  for (const auto* hp : {&h12, &h62}) {
    auto res = classify_regular_full(*hp);
    std::size_t total = 0;
    for (const auto& cls : res.classes) {
      total += cls.orbit_length;
      CHECK(hp->aut_order() % cls.orbit_length == 0);
      CHECK(cls.representative == alpha_to_subgroup(*hp, res.subgroups[cls.members[0]]));
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        const auto& member = res.subgroups[cls.members[i]];
        CHECK(conjugate_alpha(*hp, cls.witnesses[i], cls.alpha) == member);
        CHECK(cls.alpha <= member);
      }
    }
    CHECK(total == res.subgroups.size());
  }
}

TEST_CASE("orbit partition does not depend on the generator order") {
  auto h = holomorph(make_abelian(kC62));
  auto gens = find_generators(h.auts().carrier());
  RegularSearchOptions forward, backward, all;
  forward.aut_generators = gens;
  backward.aut_generators = std::vector<Elem>(gens.rbegin(), gens.rend());
  for (Elem a = 1; a < h.aut_order(); ++a) all.aut_generators.push_back(a);
  auto summary = [&](const RegularSearchOptions& o) {
    std::set<std::vector<std::size_t>> parts;
    for (auto cls : classify_regular(h, o)) {
      std::sort(cls.members.begin(), cls.members.end());
      parts.insert(cls.members);
    }
    return parts;
  };
  CHECK(summary(forward) == summary(backward));
  CHECK(summary(forward) == summary(all));
}
