#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "category.hpp"
#include "functor.hpp"
#include "report.hpp"

namespace antihom {

/// A product presentation: the object and one projection per family member.
struct Product {
  int object = 0;
  std::vector<int> projections;
  friend bool operator==(const Product&, const Product&) = default;
};

namespace detail {

/// Calls visit(cone) for every tuple (f_i) with f_i drawn from pick(i).
template <class Pick, class Visit>
void for_each_cone(std::size_t k, Pick pick, Visit visit) {
  std::vector<std::vector<int>> choices;
  for (std::size_t i = 0; i < k; ++i) {
    choices.push_back(pick(i));
    if (choices.back().empty()) return;
  }
  std::vector<std::size_t> pos(k, 0);
  std::vector<int> cone(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cone[i] = choices[i][pos[i]];
    visit(cone);
    std::size_t i = 0;
    while (i < k && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == k) return;
  }
}

/// Number of u among `candidates` with legs[i]∘u = cone[i] for every i.
inline int mediators(const FiniteCategory& c, const std::vector<int>& legs, const std::vector<int>& cone,
                     const std::vector<int>& candidates, int* found = nullptr) {
  int count = 0;
  for (int u : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = c.compose(legs[i], u) == cone[i];
    if (ok) {
      ++count;
      if (found) *found = u;
    }
  }
  return count;
}

inline std::string cone_text(const FiniteCategory& c, int y, const std::vector<int>& cone) {
  std::vector<std::string> names;
  for (int f : cone) names.push_back(c.name(f));
  return cat("Y=", c.objects[static_cast<std::size_t>(y)], " cone=", format_list(names));
}

}  // namespace detail

/// All product presentations of the family, found by testing the universal
/// property of every object and projection tuple against every cone.
inline std::vector<Product> find_products(const FiniteCategory& c, const std::vector<int>& family) {
  std::vector<Product> out;
  const std::size_t k = family.size();
  for (int x = 0; x < c.object_count(); ++x)
    detail::for_each_cone(
        k, [&](std::size_t i) { return c.hom(x, family[i]); },
        [&](const std::vector<int>& legs) {
          bool universal = true;
          for (int y = 0; y < c.object_count() && universal; ++y) {
            auto into = c.hom(y, x);
            detail::for_each_cone(
                k, [&](std::size_t i) { return c.hom(y, family[i]); },
                [&](const std::vector<int>& cone) {
                  if (universal && detail::mediators(c, legs, cone, into) != 1) universal = false;
                });
          }
          if (universal) out.push_back(Product{x, legs});
        });
  return out;
}

/// The two anti-universal properties of a product presentation, for every
/// object Y and every anti-cone (f_i* in An(Y, X_i)): (1) a unique anti u
/// with p_i∘u = f_i*; (2) a unique straight u with (p_i∘1*)∘u = f_i*.
inline TheoremReport check_anti_universal(const FactorizationCategory& fc, const Product& p,
                                          const std::vector<int>& family) {
  TheoremReport r;
  r.theorem = "anti-universal-property";
  const auto& c = fc.total;
  std::vector<int> anti_legs;
  for (int leg : p.projections) anti_legs.push_back(c.compose(leg, fc.reverse_of(p.object)));
  bool one = true, two = true;
  std::string w1, w2;
  long cones = 0;
  for (int y = 0; y < c.object_count(); ++y)
    detail::for_each_cone(
        family.size(), [&](std::size_t i) { return fc.an(y, family[i]); },
        [&](const std::vector<int>& cone) {
          ++cones;
          int n1 = detail::mediators(c, p.projections, cone, fc.an(y, p.object));
          if (n1 != 1 && one) {
            one = false;
            w1 = cat(detail::cone_text(c, y, cone), " mediators=", n1);
          }
          int n2 = detail::mediators(c, anti_legs, cone, fc.hom(y, p.object));
          if (n2 != 1 && two) {
            two = false;
            w2 = cat(detail::cone_text(c, y, cone), " mediators=", n2);
          }
        });
  r.check("unique-anti-mediator", one, w1);
  r.check("unique-straight-mediator-for-anti-projections", two, w2);
  r.notes.push_back(cat(cones, " anti-cones examined"));
  return r;
}

namespace detail {

/// Products of the straight part, re-expressed in arrow indices of fc.
inline std::vector<Product> products_in(const FactorizationCategory& fc, const std::vector<int>& family) {
  auto straight = arrows_with(fc, Variance::straight);
  auto found = find_products(fca(fc), family);
  for (auto& p : found)
    for (int& leg : p.projections) leg = straight[static_cast<std::size_t>(leg)];
  return found;
}

}  // namespace detail

/// For every ordered pair of product presentations (X, p) and (X', p'):
/// exactly one anti g with p_i∘1* = p'_i∘g, and it is an anti-isomorphism;
/// exactly one straight g with p_i∘1* = (p'_i∘1*)∘g, and it is an
/// isomorphism. The anti-universal properties are checked on each
/// presentation as well.
inline TheoremReport anti_product_uniqueness(const FactorizationCategory& fc, const std::vector<int>& family) {
  TheoremReport r;
  r.theorem = "anti-product-uniqueness";
  const auto& c = fc.total;
  auto products = detail::products_in(fc, family);
  r.notes.push_back(cat(products.size(), " product presentations"));
  if (!r.check("product-exists", !products.empty(), "NoProduct")) return r;
  for (std::size_t i = 0; i < products.size(); ++i)
    r.absorb(check_anti_universal(fc, products[i], family), cat("presentation ", i, ": "));
  bool anti_ok = true, iso_ok = true;
  std::string wa, wi;
  for (std::size_t a = 0; a < products.size(); ++a)
    for (std::size_t b = 0; b < products.size(); ++b) {
      const auto& p = products[a];
      const auto& q = products[b];
      std::vector<int> p_anti, q_anti;
      for (int leg : p.projections) p_anti.push_back(c.compose(leg, fc.reverse_of(p.object)));
      for (int leg : q.projections) q_anti.push_back(c.compose(leg, fc.reverse_of(q.object)));
      auto where = cat("presentations ", a, " -> ", b);
      int g = -1;
      int n = detail::mediators(c, q.projections, p_anti, fc.an(p.object, q.object), &g);
      if ((n != 1 || !anti_inverse(fc, g)) && anti_ok) {
        anti_ok = false;
        wa = cat(where, ": ", n, " anti comparisons");
      }
      n = detail::mediators(c, q_anti, p_anti, fc.hom(p.object, q.object), &g);
      if ((n != 1 || !inverse_arrow(c, g)) && iso_ok) {
        iso_ok = false;
        wi = cat(where, ": ", n, " straight comparisons");
      }
    }
  r.check("unique-comparison-anti-isomorphism", anti_ok, wa);
  r.check("unique-comparison-isomorphism", iso_ok, wi);
  return r;
}

/// Images of the family's product presentations under a factorable functor:
/// whether each image is again a product, and whether the image presentation
/// satisfies both anti-universal properties in the target.
inline TheoremReport check_antiproduct_preservation(const FunctorData& f, const FactorizationCategory& c,
                                                    const FactorizationCategory& d, const std::vector<int>& family) {
  TheoremReport r;
  r.theorem = "anti-product-preservation";
  auto factorable = check_factorable(f, c, d);
  r.absorb(factorable, "");
  if (!factorable.pass()) return r;
  std::vector<int> image_family;
  for (int x : family) image_family.push_back(f.objects[static_cast<std::size_t>(x)]);
  auto targets = detail::products_in(d, image_family);
  auto products = detail::products_in(c, family);
  if (!r.check("product-exists", !products.empty(), "NoProduct")) return r;
  for (std::size_t i = 0; i < products.size(); ++i) {
    Product img{f.objects[static_cast<std::size_t>(products[i].object)], {}};
    for (int leg : products[i].projections) img.projections.push_back(f.arrows[static_cast<std::size_t>(leg)]);
    bool is_product = std::find(targets.begin(), targets.end(), img) != targets.end();
    r.check(cat("presentation ", i, ": image-is-product"), is_product,
            cat("image object ", d.total.objects[static_cast<std::size_t>(img.object)]));
    r.absorb(check_anti_universal(d, img, image_family), cat("presentation ", i, ": image "));
  }
  return r;
}

}  // namespace antihom
