#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "morphism_type.hpp"
#include "ring.hpp"

namespace antihom {

using GroupMorphism = Morphism<FiniteGroup>;
using RingMorphism = Morphism<FiniteRing>;

/// First failure of the straight or anti law for a group map, if any.
inline std::optional<std::string> law_violation(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& img,
                                                Variance v) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      int lhs = img[static_cast<std::size_t>(a.mul(x, y))];
      int rhs = v == Variance::straight ? b.mul(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)])
                                        : b.mul(img[static_cast<std::size_t>(y)], img[static_cast<std::size_t>(x)]);
      if (lhs != rhs) return cat("m(", x, "*", y, ")=", lhs, " but expected ", rhs);
    }
  return std::nullopt;
}

/// Rings: additive, (anti-)multiplicative, and unital unless `unital` is off.
inline std::optional<std::string> law_violation(const FiniteRing& a, const FiniteRing& b, const std::vector<int>& img,
                                                Variance v, bool unital = true) {
  auto m = [&](int x) { return img[static_cast<std::size_t>(x)]; };
  if (unital && m(a.one()) != b.one()) return cat("m(1)=", m(a.one()));
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      if (m(a.add(x, y)) != b.add(m(x), m(y))) return cat("m(", x, "+", y, ") != m(", x, ")+m(", y, ")");
      int rhs = v == Variance::straight ? b.mul(m(x), m(y)) : b.mul(m(y), m(x));
      if (m(a.mul(x, y)) != rhs) return cat("m(", x, "*", y, ")=", m(a.mul(x, y)), " but expected ", rhs);
    }
  return std::nullopt;
}

template <class S>
std::optional<std::string> range_violation(const S& a, const S& b, const std::vector<int>& img) {
  if (static_cast<int>(img.size()) != a.order()) return cat("table has ", img.size(), " entries, source has ", a.order());
  for (int x = 0; x < a.order(); ++x)
    if (img[static_cast<std::size_t>(x)] < 0 || img[static_cast<std::size_t>(x)] >= b.order())
      return cat("image of ", x, " is out of range");
  return std::nullopt;
}

template <class S>
Classification classify(const std::vector<int>& img, const S& a, const S& b) {
  if (range_violation(a, b, img)) return Classification::Neither;
  bool hom = !law_violation(a, b, img, Variance::straight);
  bool anti = !law_violation(a, b, img, Variance::anti);
  if (hom && anti) return Classification::Both;
  if (hom) return Classification::HomOnly;
  if (anti) return Classification::AntiOnly;
  return Classification::Neither;
}

template <class S>
Classification classify(const Morphism<S>& m) {
  return classify(m.images, m.source, m.target);
}

/// Checked construction; throws LawViolation with the failing pair.
template <class S>
Morphism<S> make_morphism(const S& a, const S& b, std::vector<int> img, Variance v) {
  if (auto r = range_violation(a, b, img)) fail(ErrorKind::LawViolation, *r);
  if (auto w = law_violation(a, b, img, v)) fail(ErrorKind::LawViolation, cat(to_string(v), " law: ", *w));
  return Morphism<S>{a, b, std::move(img), v};
}

template <class S>
Morphism<S> identity_morphism(const S& a) {
  std::vector<int> img(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) img[static_cast<std::size_t>(i)] = i;
  return Morphism<S>{a, a, std::move(img), Variance::straight};
}

/// g after f. The result carries the XOR of the variances and is checked
/// against that law; a failure there means the engine is inconsistent.
template <class S>
Morphism<S> compose(const Morphism<S>& g, const Morphism<S>& f) {
  if (!(f.target == g.source))
    fail(ErrorKind::NotComposable, cat("target of inner map (", f.target.name(), ") is not the source of outer map (",
                                       g.source.name(), ")"));
  std::vector<int> img(f.images.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f.images[i]);
  Variance v = g.variance ^ f.variance;
  if (auto w = law_violation(f.source, g.target, img, v)) fail(ErrorKind::LawViolation, *w);
  return Morphism<S>{f.source, g.target, std::move(img), v};
}

/// Inversion, the order-reversing unit of a group.
inline GroupMorphism reverse_morphism(const FiniteGroup& a) {
  std::vector<int> img(a.inverses().begin(), a.inverses().end());
  return GroupMorphism{a, a, std::move(img), Variance::anti};
}

/// The stored involution of a ring.
inline RingMorphism reverse_morphism(const FiniteRing& a) {
  if (!a.has_involution()) fail(ErrorKind::NoInvolution, cat("ring ", a.name(), " carries no involution"));
  return RingMorphism{a, a, a.involution_table(), Variance::anti};
}

/// (g* after f*) after the reverse morphism of the source of f*.
template <class S>
Morphism<S> star_compose(const Morphism<S>& g, const Morphism<S>& f) {
  if (g.variance != Variance::anti || f.variance != Variance::anti)
    fail(ErrorKind::PreconditionFailed, "star composition takes two anti morphisms");
  return compose(compose(g, f), reverse_morphism(f.source));
}

template <class S>
Morphism<S> corresponding_anti(const Morphism<S>& f) {
  if (f.variance != Variance::straight) fail(ErrorKind::PreconditionFailed, "expected a straight morphism");
  return compose(f, reverse_morphism(f.source));
}

template <class S>
Morphism<S> corresponding_hom(const Morphism<S>& f) {
  if (f.variance != Variance::anti) fail(ErrorKind::PreconditionFailed, "expected an anti morphism");
  return compose(f, reverse_morphism(f.source));
}

template <class S>
bool is_injective(const Morphism<S>& m) {
  std::vector<int> s = m.images;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

template <class S>
bool is_surjective(const Morphism<S>& m) {
  std::vector<char> hit(static_cast<std::size_t>(m.target.order()), 0);
  for (int y : m.images) hit[static_cast<std::size_t>(y)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

template <class S>
bool is_bijective(const Morphism<S>& m) {
  return m.source.order() == m.target.order() && is_injective(m);
}

/// Inverse of a bijective morphism, tagged with the same variance and
/// checked against that law.
template <class S>
Morphism<S> inverse_morphism(const Morphism<S>& m) {
  if (!is_bijective(m)) fail(ErrorKind::PreconditionFailed, "map is not bijective");
  std::vector<int> img(m.images.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[static_cast<std::size_t>(m.images[i])] = static_cast<int>(i);
  return make_morphism(m.target, m.source, std::move(img), m.variance);
}

template <class S>
std::vector<int> image_set(const Morphism<S>& m) {
  std::vector<int> s = m.images;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

template <class S>
std::vector<int> preimage_set(const Morphism<S>& m, const std::vector<int>& targets) {
  std::vector<char> in(static_cast<std::size_t>(m.target.order()), 0);
  for (int t : targets) in[static_cast<std::size_t>(t)] = 1;
  std::vector<int> out;
  for (int x = 0; x < m.source.order(); ++x)
    if (in[static_cast<std::size_t>(m(x))]) out.push_back(x);
  return out;
}

inline Subgroup kernel(const GroupMorphism& m) {
  return Subgroup{m.source, preimage_set(m, {m.target.identity()})};
}

inline Subgroup image(const GroupMorphism& m) { return Subgroup{m.target, image_set(m)}; }

inline RingIdeal kernel(const RingMorphism& m) {
  return RingIdeal{m.source, preimage_set(m, {m.target.zero()}), Side::two_sided};
}

/// B / Im m when the image is normal; otherwise a conjugation witness.
struct GroupCokernel {
  std::optional<GroupQuotient> quotient;
  std::optional<std::pair<int, int>> witness;  // (conjugator, image element)
  bool defined() const { return quotient.has_value(); }
};

inline GroupCokernel cokernel(const GroupMorphism& m) {
  Subgroup im = image(m);
  if (auto w = normality_witness(m.target, im)) return GroupCokernel{std::nullopt, w};
  return GroupCokernel{quotient(m.target, im), std::nullopt};
}

/// The additive group (R, +) as a FiniteGroup.
inline FiniteGroup additive_group(const FiniteRing& r) {
  return group_from_op(r.order(), [&](int a, int b) { return r.add(a, b); }, r.name() + "(+)");
}

/// Rings: the additive quotient of the target by the image.
inline GroupQuotient cokernel(const RingMorphism& m) {
  FiniteGroup g = additive_group(m.target);
  return quotient(g, Subgroup{g, image_set(m)});
}

template <class S>
std::string describe(const Morphism<S>& m, const std::string& label = "") {
  std::string head = label.empty() ? std::string() : label + " = ";
  return head + to_string(m.variance) + " " + m.source.name() + "->" + m.target.name() + " " + format_list(m.images);
}

}  // namespace antihom
