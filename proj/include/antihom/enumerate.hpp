#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "ring.hpp"

namespace antihom {

constexpr long kDefaultBound = 1'000'000;

inline void check_bound(int target_order, std::size_t gens, long bound) {
  double candidates = std::pow(static_cast<double>(target_order), static_cast<double>(gens));
  if (candidates > static_cast<double>(bound))
    fail(ErrorKind::BoundExceeded, cat(target_order, "^", gens, " candidate extensions exceed bound ", bound));
}

namespace detail {

// Runs `visit` on every assignment of generator images (odometer order).
template <class Visit>
void for_each_assignment(std::size_t k, int n, Visit&& visit) {
  std::vector<int> choice(k, 0);
  while (true) {
    visit(choice);
    std::size_t i = 0;
    while (i < k && ++choice[i] == n) choice[i++] = 0;
    if (i == k) return;
  }
}

template <class S>
void canonicalize(std::vector<Morphism<S>>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.images == y.images; }),
          v.end());
}

}  // namespace detail

/// Hom(A, B) by extending generator images along a Cayley spanning tree.
inline std::vector<GroupMorphism> enumerate_homs(const FiniteGroup& a, const FiniteGroup& b,
                                                 long bound = kDefaultBound) {
  auto gens = generators(a);
  check_bound(b.order(), gens.size(), bound);
  auto tree = generator_tree(a, gens);
  auto mul = [&](int x, int y) { return b.mul(x, y); };
  std::vector<GroupMorphism> out;
  detail::for_each_assignment(gens.size(), b.order(), [&](const std::vector<int>& choice) {
    if (auto img = extend_homomorphism(a, tree, choice, b.identity(), mul))
      out.push_back(GroupMorphism{a, b, std::move(*img), Variance::straight});
  });
  detail::canonicalize(out);
  return out;
}

/// An(A, B) as {f after inversion : f in Hom(A, B)}.
inline std::vector<GroupMorphism> enumerate_antihoms(const FiniteGroup& a, const FiniteGroup& b,
                                                     long bound = kDefaultBound) {
  std::vector<GroupMorphism> out;
  for (const auto& f : enumerate_homs(a, b, bound)) out.push_back(corresponding_anti(f));
  detail::canonicalize(out);
  return out;
}

inline std::vector<GroupMorphism> enumerate(const FiniteGroup& a, const FiniteGroup& b, Variance v,
                                            long bound = kDefaultBound) {
  return v == Variance::straight ? enumerate_homs(a, b, bound) : enumerate_antihoms(a, b, bound);
}

/// Additive maps A -> B that obey the multiplicative law of variance `v`;
/// with `unital` set they must also send 1 to 1. Additive generators of A
/// fix the map.
inline std::vector<RingMorphism> enumerate_ring_maps(const FiniteRing& a, const FiniteRing& b, Variance v, bool unital,
                                                     long bound = kDefaultBound) {
  FiniteGroup add_a = additive_group(a);
  auto gens = generators(add_a);
  check_bound(b.order(), gens.size(), bound);
  auto tree = generator_tree(add_a, gens);
  auto badd = [&](int x, int y) { return b.add(x, y); };
  std::vector<RingMorphism> out;
  detail::for_each_assignment(gens.size(), b.order(), [&](const std::vector<int>& choice) {
    auto img = extend_homomorphism(add_a, tree, choice, b.zero(), badd);
    if (!img) return;
    if (law_violation(a, b, *img, v, unital)) return;
    out.push_back(RingMorphism{a, b, std::move(*img), v});
  });
  detail::canonicalize(out);
  return out;
}

inline std::vector<RingMorphism> enumerate_homs(const FiniteRing& a, const FiniteRing& b, long bound = kDefaultBound) {
  return enumerate_ring_maps(a, b, Variance::straight, true, bound);
}

/// An(A, B) computed as Hom(A, B^op) and retagged with target B.
inline std::vector<RingMorphism> enumerate_antihoms(const FiniteRing& a, const FiniteRing& b,
                                                    long bound = kDefaultBound) {
  std::vector<RingMorphism> out;
  for (auto& f : enumerate_homs(a, opposite(b), bound)) out.push_back(RingMorphism{a, b, f.images, Variance::anti});
  detail::canonicalize(out);
  return out;
}

inline std::vector<RingMorphism> enumerate(const FiniteRing& a, const FiniteRing& b, Variance v,
                                           long bound = kDefaultBound) {
  return v == Variance::straight ? enumerate_homs(a, b, bound) : enumerate_antihoms(a, b, bound);
}

/// Composable anti pairs A -> B -> C sharing a composite.
template <class S>
struct FactorClass {
  Morphism<S> composite;
  S middle;
  std::vector<std::pair<Morphism<S>, Morphism<S>>> pairs;  // (first applied, second applied)
};

/// Partition of An(A,B) x An(B,C) by composite, in canonical composite order.
template <class S>
std::vector<FactorClass<S>> factorization_classes(const S& a, const S& b, const S& c, long bound = kDefaultBound) {
  auto first = enumerate_antihoms(a, b, bound);
  auto second = enumerate_antihoms(b, c, bound);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<FactorClass<S>> classes;
  for (const auto& f1 : first)
    for (const auto& f2 : second) {
      Morphism<S> comp = compose(f2, f1);
      auto [it, fresh] = index.emplace(comp.images, classes.size());
      if (fresh) classes.push_back(FactorClass<S>{comp, b, {}});
      classes[it->second].pairs.emplace_back(f1, f2);
    }
  std::sort(classes.begin(), classes.end(),
            [](const FactorClass<S>& x, const FactorClass<S>& y) { return x.composite < y.composite; });
  return classes;
}

}  // namespace antihom
