#pragma once

#include <map>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "morphism.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace antihom {

namespace detail {

inline std::vector<int> pointwise(const FiniteRing& b, const std::vector<int>& f, const std::vector<int>& g, bool sum) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = sum ? b.add(f[i], g[i]) : b.mul(f[i], g[i]);
  return out;
}

// Checks closure of `maps` under pointwise + and *; the first escape per
// operation is recorded with both operands and the law it breaks.
inline void audit_closure(TheoremReport& r, const std::string& tag, const FiniteRing& a, const FiniteRing& b,
                          const std::vector<RingMorphism>& maps, Variance v, bool unital) {
  for (bool sum : {true, false}) {
    std::string op = sum ? "+" : "*";
    std::string witness;
    for (const auto& f : maps) {
      for (const auto& g : maps) {
        auto h = pointwise(b, f.images, g.images, sum);
        if (auto w = law_violation(a, b, h, v, unital)) {
          witness = cat(format_list(f.images), op, format_list(g.images), "=", format_list(h), " breaks law: ", *w);
          break;
        }
      }
      if (!witness.empty()) break;
    }
    r.check(tag + "-closed-under-" + (sum ? "sum" : "product"), witness.empty(), witness);
  }
}

}  // namespace detail

/// Closure of Hom(A,B) and An(A,B) under pointwise + and *. The audited sets
/// are the additive (anti-)multiplicative maps, zero map included; the
/// unital sets are audited too and reported as notes only, since a pointwise
/// sum never sends 1 to 1 there.
inline TheoremReport pointwise_ring_audit(const FiniteRing& a, const FiniteRing& b, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "pointwise-ring";
  r.inputs = {a.name(), b.name()};
  for (Variance v : {Variance::straight, Variance::anti}) {
    std::string tag = v == Variance::straight ? "hom" : "an";
    auto maps = enumerate_ring_maps(a, b, v, false, bound);
    r.witnesses.push_back(cat(tag, " set size ", maps.size()));
    detail::audit_closure(r, tag, a, b, maps, v, false);

    TheoremReport unital;
    detail::audit_closure(unital, tag, a, b, enumerate_ring_maps(a, b, v, true, bound), v, true);
    for (const auto& c : unital.checks)
      r.notes.push_back("unital " + c.name + ": " + (c.pass ? "holds" : "fails, " + c.witness));
  }
  return r;
}

/// f -> (x -> f(x) + I) from An(R,R) to An(R,R/I): every image is checked to
/// be an anti map, and the map is checked against pointwise + and * on all
/// pairs. Whether An(R,R) is itself closed under those operations is noted.
inline TheoremReport natural_an_map(const FiniteRing& r, const RingIdeal& ideal, long bound = kDefaultBound) {
  TheoremReport rep;
  rep.theorem = "natural-an-map";
  rep.inputs = {r.name(), cat("ideal ", format_list(ideal.members))};
  RingQuotient q = quotient_ring(r, ideal);
  auto an = enumerate_antihoms(r, r, bound);
  auto an_q = enumerate_antihoms(r, q.ring, bound);
  std::map<std::vector<int>, int> target_index;
  for (std::size_t i = 0; i < an_q.size(); ++i) target_index[an_q[i].images] = static_cast<int>(i);

  std::vector<std::vector<int>> images;
  std::string bad;
  for (const auto& f : an) {
    std::vector<int> phi(f.images.size());
    for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = q.projection(f.images[x]);
    if (bad.empty()) {
      if (auto w = law_violation(r, q.ring, phi, Variance::anti))
        bad = cat("image of ", format_list(f.images), ": ", *w);
      else if (!target_index.count(phi))
        bad = cat("image of ", format_list(f.images), " missing from enumeration");
    }
    images.push_back(std::move(phi));
  }
  rep.check("images-are-anti", bad.empty(), bad);
  rep.witnesses.push_back(cat("domain size ", an.size(), ", codomain size ", an_q.size()));

  std::string add_bad, mul_bad;
  for (std::size_t i = 0; i < an.size(); ++i)
    for (std::size_t j = 0; j < an.size(); ++j) {
      auto s = detail::pointwise(r, an[i].images, an[j].images, true);
      auto p = detail::pointwise(r, an[i].images, an[j].images, false);
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (add_bad.empty() &&
            q.projection(s[x]) != q.ring.add(images[i][x], images[j][x]))
          add_bad = cat("pair (", i, ",", j, ") at ", x);
        if (mul_bad.empty() &&
            q.projection(p[x]) != q.ring.mul(images[i][x], images[j][x]))
          mul_bad = cat("pair (", i, ",", j, ") at ", x);
      }
    }
  rep.check("respects-sum", add_bad.empty(), add_bad);
  rep.check("respects-product", mul_bad.empty(), mul_bad);

  TheoremReport closure;
  detail::audit_closure(closure, "domain", r, r, an, Variance::anti, true);
  for (const auto& c : closure.checks)
    rep.notes.push_back(c.name + ": " + (c.pass ? "holds" : "fails, " + c.witness));
  return rep;
}

}  // namespace antihom
