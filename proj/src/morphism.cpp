#include <functional>
#include <map>
#include <numeric>

#include "npbrace/group.hpp"

namespace npbrace {

namespace {

constexpr Elem kUnset = ~Elem{0};

// Enumerates injective homomorphisms from `dom` into `cod` by choosing the
// image of each generator in turn and extending along right multiplication.
// A partial map is kept only while it is a well-defined injective
// homomorphism on the subgroup generated so far.
class InjectionSearch {
 public:
  InjectionSearch(const FiniteGroup& dom, const FiniteGroup& cod)
      : dom_(dom), cod_(cod), gens_(find_generators(dom)) {
    img_.assign(dom.order(), kUnset);
    used_.assign(cod.order(), 0);
    img_[0] = 0;
    used_[0] = 1;
    known_.push_back(0);
    dom_order_ = orders(dom);
    cod_order_ = orders(cod);
    dom_class_ = class_sizes(dom);
    cod_class_ = class_sizes(cod);
  }

  // Calls `visit` with every complete map; stops when it returns false.
  void run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    stop_ = false;
    recurse(0, visit);
  }

 private:
  static std::vector<std::size_t> orders(const FiniteGroup& g) {
    std::vector<std::size_t> o(g.order());
    for (Elem x = 0; x < g.order(); ++x) o[x] = element_order(g, x);
    return o;
  }

  static std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
    std::vector<std::size_t> s(g.order());
    for (const auto& cls : conjugacy_classes(g))
      for (Elem x : cls) s[x] = cls.size();
    return s;
  }

  // Extends the map over <gens_[0..level]>; false on a contradiction.
  bool extend(std::size_t level) {
    for (std::size_t i = 0; i < known_.size(); ++i) {
      const Elem a = known_[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const Elem b = dom_.mul(a, gens_[j]);
        const Elem target = cod_.mul(img_[a], img_[gens_[j]]);
        if (img_[b] == kUnset) {
          if (used_[target]) return false;
          img_[b] = target;
          used_[target] = 1;
          known_.push_back(b);
        } else if (img_[b] != target) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (known_.size() > mark) {
      used_[img_[known_.back()]] = 0;
      img_[known_.back()] = kUnset;
      known_.pop_back();
    }
  }

  void recurse(std::size_t level,
               const std::function<bool(const std::vector<Elem>&)>& visit) {
    if (level == gens_.size()) {
      if (!visit(img_)) stop_ = true;
      return;
    }
    const Elem g = gens_[level];
    for (Elem c = 1; c < cod_.order() && !stop_; ++c) {
      if (used_[c] || cod_order_[c] != dom_order_[g]) continue;
      if (dom_.order() == cod_.order() && cod_class_[c] != dom_class_[g]) continue;
      const std::size_t mark = known_.size();
      img_[g] = c;
      used_[c] = 1;
      known_.push_back(g);
      if (extend(level)) recurse(level + 1, visit);
      undo(mark);
    }
  }

  const FiniteGroup& dom_;
  const FiniteGroup& cod_;
  std::vector<Elem> gens_;
  std::vector<Elem> img_;
  std::vector<char> used_;
  std::vector<Elem> known_;
  std::vector<std::size_t> dom_order_, cod_order_, dom_class_, cod_class_;
  bool stop_ = false;
};

std::vector<Permutation> all_automorphisms(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw ResourceError("automorphism_group: order " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  std::vector<Permutation> perms;
  if (g.order() == 1) return {Permutation{0}};
  InjectionSearch search(g, g);
  search.run([&](const std::vector<Elem>& img) {
    perms.push_back(img);
    return true;
  });
  std::sort(perms.begin(), perms.end());
  return perms;
}

}  // namespace

AutomorphismGroup::AutomorphismGroup(FiniteGroup parent, std::vector<Permutation> action)
    : parent_(std::move(parent)), action_(std::move(action)) {
  std::sort(action_.begin(), action_.end());
  const std::size_t n = parent_.order();
  const std::size_t m = action_.size();
  if (m == 0) throw std::invalid_argument("AutomorphismGroup: empty action");
  for (const auto& perm : action_) {
    GroupMap map{parent_, parent_, perm};
    if (!map.is_bijective() || !map.is_homomorphism())
      throw std::invalid_argument("AutomorphismGroup: not an automorphism");
  }
  if (std::adjacent_find(action_.begin(), action_.end()) != action_.end())
    throw std::invalid_argument("AutomorphismGroup: repeated automorphism");
  std::vector<Elem> t(m * m);
  Permutation comp(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) comp[x] = action_[a][action_[b][x]];
      auto it = std::lower_bound(action_.begin(), action_.end(), comp);
      if (it == action_.end() || *it != comp)
        throw std::invalid_argument("AutomorphismGroup: action not closed");
      t[a * m + b] = static_cast<Elem>(it - action_.begin());
    }
  carrier_ = FiniteGroup(m, std::move(t), "Aut(" + parent_.label() + ")");
}

std::optional<Elem> AutomorphismGroup::index_of(const Permutation& perm) const {
  auto it = std::lower_bound(action_.begin(), action_.end(), perm);
  if (it == action_.end() || *it != perm) return std::nullopt;
  return static_cast<Elem>(it - action_.begin());
}

AutomorphismGroup automorphism_group(const FiniteGroup& g, std::size_t bound) {
  return AutomorphismGroup(g, all_automorphisms(g, bound));
}

std::size_t count_automorphisms(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw ResourceError("count_automorphisms: order exceeds bound");
  if (g.order() == 1) return 1;
  std::size_t count = 0;
  InjectionSearch search(g, g);
  search.run([&](const std::vector<Elem>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (a.order() == 1) return GroupMap{a, b, {0}};
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  std::optional<GroupMap> found;
  InjectionSearch search(a, b);
  search.run([&](const std::vector<Elem>& img) {
    found = GroupMap{a, b, img};
    return false;
  });
  return found;
}

}  // namespace npbrace
