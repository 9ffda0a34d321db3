#include "npbrace/brace.hpp"

#include <algorithm>

namespace npbrace {

namespace {

bool is_automorphism(const FiniteGroup& g, const Permutation& perm) {
  if (perm.size() != g.order()) return false;
  GroupMap m{g, g, perm};
  return m.is_bijective() && m.is_homomorphism();
}

// f(x o y) = f(x) o f(y) for all x and all y in a generating set of dom.
bool respects_mul(const FiniteGroup& dom, const FiniteGroup& cod, const Permutation& f,
                  std::span<const Elem> dom_gens) {
  for (Elem x = 0; x < dom.order(); ++x)
    for (Elem g : dom_gens)
      if (f[dom.mul(x, g)] != cod.mul(f[x], f[g])) return false;
  return true;
}

}  // namespace

bool satisfies_brace_relation(const FiniteGroup& add, const FiniteGroup& mul) {
  if (add.order() != mul.order() || !add.is_abelian()) return false;
  const auto gens = find_generators(add);
  const Elem n = static_cast<Elem>(add.order());
  auto lambda = [&](Elem a, Elem b) { return add.mul(add.inv(a), mul.mul(a, b)); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem g : gens)
        if (lambda(a, add.mul(b, g)) != add.mul(lambda(a, b), lambda(a, g))) return false;
  return true;
}

LeftBrace::LeftBrace(FiniteGroup add, FiniteGroup mul) : add_(std::move(add)), mul_(std::move(mul)) {
  if (add_.order() != mul_.order()) throw std::invalid_argument("brace: group orders differ");
  if (!add_.is_abelian()) throw std::invalid_argument("brace: additive group is not abelian");
  if (!satisfies_brace_relation(add_, mul_))
    throw std::invalid_argument("brace: a(b + c) = ab - a + ac fails");
}

bool LeftBrace::is_trivial() const {
  return std::equal(add_.table().begin(), add_.table().end(), mul_.table().begin());
}

bool BraceMap::is_morphism() const {
  if (images.size() != domain.order()) return false;
  for (Elem x : images)
    if (x >= codomain.order()) return false;
  for (Elem a = 0; a < domain.order(); ++a)
    for (Elem b = 0; b < domain.order(); ++b) {
      if (images[domain.plus(a, b)] != codomain.plus(images[a], images[b])) return false;
      if (images[domain.times(a, b)] != codomain.times(images[a], images[b])) return false;
    }
  return true;
}

bool BraceMap::is_isomorphism() const {
  if (domain.order() != codomain.order() || images.size() != domain.order()) return false;
  std::vector<char> hit(codomain.order(), 0);
  for (Elem x : images) {
    if (x >= codomain.order() || hit[x]) return false;
    hit[x] = 1;
  }
  return is_morphism();
}

LeftBrace trivial_brace(std::size_t n) {
  auto c = make_cyclic(n);
  return LeftBrace(c, c);
}

LeftBrace brace_from_alpha(const HolomorphGroup& h, const AlphaMap& alpha) {
  return LeftBrace(h.base(), regular_group(h, alpha));
}

LeftBrace brace_from_regular(const HolomorphGroup& h, const Subgroup& r) {
  auto alpha = subgroup_to_alpha(h, r);
  if (!alpha || !is_subgroup(h, r))
    throw std::invalid_argument("brace_from_regular: subgroup is not regular");
  return brace_from_alpha(h, *alpha);
}

AlphaMap brace_to_alpha(const HolomorphGroup& h, const LeftBrace& b) {
  if (!(h.base() == b.add()))
    throw std::invalid_argument("brace_to_alpha: additive group differs from the holomorph base");
  AlphaMap alpha(b.order());
  Permutation lam(b.order());
  for (Elem x = 0; x < b.order(); ++x) {
    for (Elem y = 0; y < b.order(); ++y) lam[y] = b.lambda(x, y);
    auto idx = h.auts().index_of(lam);
    if (!idx) throw std::logic_error("brace_to_alpha: lambda map is not an automorphism");
    alpha[x] = *idx;
  }
  return alpha;
}

std::optional<BraceMap> find_brace_isomorphism(const LeftBrace& a, const LeftBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (!(fingerprint(a.mul()) == fingerprint(b.mul()))) return std::nullopt;
  auto base = find_isomorphism(a.add(), b.add());
  if (!base) return std::nullopt;
  const auto auts = automorphism_group(a.add(), std::max(a.order(), kVerifyBound));
  const auto gens = find_generators(a.mul());
  Permutation f(a.order());
  for (const auto& sigma : auts.action()) {
    for (Elem x = 0; x < a.order(); ++x) f[x] = base->images[sigma[x]];
    if (respects_mul(a.mul(), b.mul(), f, gens)) return BraceMap{a, b, f};
  }
  return std::nullopt;
}

std::vector<Permutation> brace_automorphisms(const LeftBrace& b) {
  const auto auts = automorphism_group(b.add(), std::max(b.order(), kVerifyBound));
  const auto gens = find_generators(b.mul());
  std::vector<Permutation> out;
  for (const auto& sigma : auts.action())
    if (respects_mul(b.mul(), b.mul(), sigma, gens)) out.push_back(sigma);
  return out;
}

LeftBrace direct_product_brace(const LeftBrace& b1, const LeftBrace& b2) {
  return LeftBrace(direct_product(b1.add(), b2.add()), direct_product(b1.mul(), b2.mul()));
}

LeftBrace semidirect_product_brace(const LeftBrace& b1, const LeftBrace& b2,
                                   std::span<const Permutation> tau) {
  if (tau.size() != b2.order())
    throw std::invalid_argument("semidirect_product_brace: need one map per element of B2");
  for (const auto& t : tau)
    if (!is_automorphism(b1.add(), t) || !is_automorphism(b1.mul(), t))
      throw std::invalid_argument("semidirect_product_brace: map is not a brace automorphism");
  // semidirect_product checks that b -> tau[b] is a morphism on (B2, o)
  return LeftBrace(direct_product(b1.add(), b2.add()),
                   semidirect_product(b1.mul(), b2.mul(), tau));
}

LeftBrace semidirect_product_brace(const LeftBrace& b2, const TauMorphism& tau) {
  if (!is_tau_morphism(b2.mul(), tau))
    throw std::invalid_argument("semidirect_product_brace: tau is not a morphism into Z_p^*");
  const auto action = tau_action(tau);
  return semidirect_product_brace(trivial_brace(tau.p), b2, action);
}

NpDecomposition decompose_np_brace(const LeftBrace& b, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("decompose_np_brace: p is not prime");
  if (b.order() % p != 0 || (b.order() / p) % p == 0)
    throw std::invalid_argument("decompose_np_brace: p must divide |B| exactly once");
  const std::size_t n = b.order() / p;
  if (!check_hypothesis(n, p)) throw HypothesisError(hypothesis_diagnostic(n, p));

  const auto& add = b.add();
  NpDecomposition d;
  d.p = p;
  std::vector<Elem> position(b.order(), ~Elem{0});  // index in E, if any
  std::vector<Elem> p_part;
  for (Elem x = 0; x < b.order(); ++x) {
    const std::size_t o = element_order(add, x);
    if (n % o == 0) {
      position[x] = static_cast<Elem>(d.embedding.size());
      d.embedding.push_back(x);
    }
    if (p % o == 0) p_part.push_back(x);
  }
  d.p_generator = p_part.at(1);

  // multiples i * g of the generator of the order-p part
  std::vector<Elem> multiple(p, 0);
  std::vector<std::uint32_t> coefficient(b.order(), 0);
  for (std::size_t i = 1; i < p; ++i) {
    multiple[i] = add.mul(multiple[i - 1], d.p_generator);
    coefficient[multiple[i]] = static_cast<std::uint32_t>(i);
  }

  // lambda_q acts trivially on E for q in the order-p part
  for (Elem q : p_part)
    for (Elem e : d.embedding)
      if (b.lambda(q, e) != e)
        throw Error("decompose_np_brace: the order-p part acts nontrivially on its complement");

  std::vector<Elem> add_t(n * n), mul_t(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem s = position[add.mul(d.embedding[i], d.embedding[j])];
      const Elem m = position[b.times(d.embedding[i], d.embedding[j])];
      if (m >= n) throw Error("decompose_np_brace: complement is not closed under the product");
      add_t[i * n + j] = s;
      mul_t[i * n + j] = m;
    }
  FiniteGroup e_add(n, std::move(add_t));
  FiniteGroup e_mul(n, std::move(mul_t));
  d.complement = LeftBrace(e_add.with_label(group_label(e_add)), e_mul.with_label(group_label(e_mul)));

  d.tau.p = p;
  d.tau.values.resize(n);
  for (Elem k = 0; k < n; ++k) d.tau.values[k] = coefficient[b.lambda(d.embedding[k], d.p_generator)];

  if (!recomposition_map(b, d).is_isomorphism())
    throw Error("decompose_np_brace: recomposition is not an isomorphism");
  return d;
}

BraceMap recomposition_map(const LeftBrace& b, const NpDecomposition& d) {
  auto domain = semidirect_product_brace(d.complement, d.tau);
  const std::size_t n = d.complement.order();
  Permutation images(domain.order());
  Elem ig = 0;
  for (Elem i = 0; i < d.p; ++i) {
    for (Elem k = 0; k < n; ++k) images[i * n + k] = b.plus(ig, d.embedding[k]);
    ig = b.plus(ig, d.p_generator);
  }
  return BraceMap{std::move(domain), b, std::move(images)};
}

}  // namespace npbrace
