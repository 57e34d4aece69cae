#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "morphism_type.hpp"
#include "report.hpp"

namespace antihom {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite category as explicit tables. `comp[g * size() + f]` is g∘f, or -1
/// when dst(f) != src(g). `sum` is empty unless the category is preadditive;
/// otherwise `sum[x * size() + y]` is x + y for arrows in the same hom-set and
/// -1 elsewhere.
struct FiniteCategory {
  std::string label;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identities;
  std::vector<int> comp;
  std::vector<int> sum;

  int size() const { return static_cast<int>(arrows.size()); }
  int object_count() const { return static_cast<int>(objects.size()); }
  int src(int f) const { return arrows[static_cast<std::size_t>(f)].src; }
  int dst(int f) const { return arrows[static_cast<std::size_t>(f)].dst; }
  const std::string& name(int f) const { return arrows[static_cast<std::size_t>(f)].name; }
  int id(int object) const { return identities[static_cast<std::size_t>(object)]; }
  bool preadditive() const { return !sum.empty(); }

  int compose(int g, int f) const {
    int h = comp[static_cast<std::size_t>(g * size() + f)];
    if (h < 0) fail(ErrorKind::NotComposable, cat(name(g), " after ", name(f)));
    return h;
  }
  int composite_or_none(int g, int f) const { return comp[static_cast<std::size_t>(g * size() + f)]; }
  int add(int x, int y) const {
    int s = sum[static_cast<std::size_t>(x * size() + y)];
    if (s < 0) fail(ErrorKind::NotComposable, cat(name(x), " + ", name(y)));
    return s;
  }

  bool summable(int x, int y) const { return preadditive() && sum[static_cast<std::size_t>(x * size() + y)] >= 0; }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < size(); ++f)
      if (src(f) == a && dst(f) == b) out.push_back(f);
    return out;
  }

  std::optional<int> find_object(const std::string& n) const {
    for (int i = 0; i < object_count(); ++i)
      if (objects[static_cast<std::size_t>(i)] == n) return i;
    return std::nullopt;
  }
  std::optional<int> find_arrow(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (name(i) == n) return i;
    return std::nullopt;
  }

  friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;
};

/// Builds the tables from an arrow list and a composition rule returning the
/// composite index of g∘f (called only on composable pairs).
template <class Compose>
FiniteCategory make_category(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
                             Compose compose) {
  FiniteCategory c{"", std::move(objects), std::move(arrows), std::move(identities), {}, {}};
  const int n = c.size();
  c.comp.assign(static_cast<std::size_t>(n * n), -1);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (c.dst(f) == c.src(g)) c.comp[static_cast<std::size_t>(g * n + f)] = compose(g, f);
  return c;
}

/// Fills the sum table from a rule on arrows of the same hom-set.
template <class Add>
void set_sum(FiniteCategory& c, Add add) {
  const int n = c.size();
  c.sum.assign(static_cast<std::size_t>(n * n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (c.src(x) == c.src(y) && c.dst(x) == c.dst(y)) c.sum[static_cast<std::size_t>(x * n + y)] = add(x, y);
}

namespace detail {

inline void check_shape(const FiniteCategory& c) {
  const int n = c.size(), m = c.object_count();
  if (static_cast<int>(c.identities.size()) != m)
    fail(ErrorKind::ValidationError, cat(c.identities.size(), " identities for ", m, " objects"));
  if (static_cast<int>(c.comp.size()) != n * n) fail(ErrorKind::NotSquare, cat("composition table of size ", c.comp.size()));
  for (int f = 0; f < n; ++f)
    if (c.src(f) < 0 || c.src(f) >= m || c.dst(f) < 0 || c.dst(f) >= m)
      fail(ErrorKind::ValidationError, cat("arrow ", c.name(f), " has an unknown endpoint"));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.name(i) == c.name(j)) fail(ErrorKind::ValidationError, cat("duplicate arrow name ", c.name(i)));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int h = c.composite_or_none(g, f);
      if (c.dst(f) != c.src(g)) {
        if (h != -1) fail(ErrorKind::NotClosed, cat(c.name(g), " after ", c.name(f), " defined on a non-composable pair"));
        continue;
      }
      if (h < 0 || h >= n) fail(ErrorKind::NotClosed, cat(c.name(g), " after ", c.name(f), " is undefined"));
      if (c.src(h) != c.src(f) || c.dst(h) != c.dst(g))
        fail(ErrorKind::NotClosed, cat(c.name(g), " after ", c.name(f), " = ", c.name(h), " has wrong endpoints"));
    }
}

inline void check_identities(const FiniteCategory& c) {
  for (int a = 0; a < c.object_count(); ++a) {
    int e = c.id(a);
    if (e < 0 || e >= c.size() || c.src(e) != a || c.dst(e) != a)
      fail(ErrorKind::BadIdentity, cat("identity of ", c.objects[static_cast<std::size_t>(a)], " is not an endo-arrow"));
    for (int f = 0; f < c.size(); ++f) {
      if (c.dst(f) == a && c.compose(e, f) != f) fail(ErrorKind::BadIdentity, cat(c.name(e), " after ", c.name(f)));
      if (c.src(f) == a && c.compose(f, e) != f) fail(ErrorKind::BadIdentity, cat(c.name(f), " after ", c.name(e)));
    }
  }
}

/// First non-associative triple (h, g, f) as names, if any; `keep` filters
/// which triples are examined.
template <class Keep>
std::optional<std::string> associativity_witness(const FiniteCategory& c, Keep keep) {
  for (int f = 0; f < c.size(); ++f)
    for (int g = 0; g < c.size(); ++g) {
      if (c.dst(f) != c.src(g)) continue;
      int gf = c.compose(g, f);
      for (int h = 0; h < c.size(); ++h) {
        if (c.dst(g) != c.src(h) || !keep(h, g, f)) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          return cat("(", c.name(h), ", ", c.name(g), ", ", c.name(f), ")");
      }
    }
  return std::nullopt;
}

inline void check_additive(const FiniteCategory& c) {
  const int n = c.size();
  if (static_cast<int>(c.sum.size()) != n * n) fail(ErrorKind::NotSquare, cat("sum table of size ", c.sum.size()));
  // Each hom-set splits into blocks of mutually summable arrows (one block
  // per variance in a factorization category); every block is an abelian group.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x0 = 0; x0 < n; ++x0) {
    if (seen[static_cast<std::size_t>(x0)]) continue;
    std::vector<int> h;
    for (int y = 0; y < n; ++y)
      if (c.summable(x0, y)) h.push_back(y);
    if (h.empty()) fail(ErrorKind::AddNotAbelianGroup, cat(c.name(x0), " has no sum with itself"));
    for (int y : h) seen[static_cast<std::size_t>(y)] = 1;
    std::vector<std::vector<int>> rows(h.size(), std::vector<int>(h.size()));
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) {
        int s = c.sum[static_cast<std::size_t>(h[i] * n + h[j])];
        auto it = std::find(h.begin(), h.end(), s);
        if (s < 0 || it == h.end() || c.src(s) != c.src(x0) || c.dst(s) != c.dst(x0))
          fail(ErrorKind::AddNotAbelianGroup, cat(c.name(h[i]), " + ", c.name(h[j]), " leaves its block"));
        rows[i][j] = static_cast<int>(it - h.begin());
      }
    try {
      auto g = validate_group(rows, "hom");
      if (auto w = non_commuting_pair(g))
        fail(ErrorKind::AddNotAbelianGroup, cat(c.name(h[static_cast<std::size_t>(w->first)]), " + ",
                                                c.name(h[static_cast<std::size_t>(w->second)]), " is not commutative"));
    } catch (const AlgebraError& e) {
      if (e.kind() == ErrorKind::AddNotAbelianGroup) throw;
      fail(ErrorKind::AddNotAbelianGroup, cat("block of ", c.name(x0), ": ", e.what()));
    }
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (c.dst(f) != c.src(g)) continue;
      for (int x = 0; x < n; ++x) {
        if (c.summable(f, x) &&
            c.compose(g, c.add(f, x)) != c.add(c.compose(g, f), c.compose(g, x)))
          fail(ErrorKind::NotDistributive, cat(c.name(g), " after (", c.name(f), " + ", c.name(x), ")"));
        if (c.summable(g, x) &&
            c.compose(c.add(g, x), f) != c.add(c.compose(g, f), c.compose(x, f)))
          fail(ErrorKind::NotDistributive, cat("(", c.name(g), " + ", c.name(x), ") after ", c.name(f)));
      }
    }
}

}  // namespace detail

/// Checks shape, identities, associativity over all composable triples and,
/// when present, the preadditive structure. Returns the input on success.
inline const FiniteCategory& validate_category(const FiniteCategory& c) {
  detail::check_shape(c);
  detail::check_identities(c);
  if (auto w = detail::associativity_witness(c, [](int, int, int) { return true; }))
    fail(ErrorKind::NotAssociative, *w);
  if (c.preadditive()) detail::check_additive(c);
  return c;
}

/// A category with adjoined anti-morphisms. `total` holds straight and anti
/// arrows together with every composition between them; `variance` tags each
/// arrow and `reverse[a]` is the reverse morphism of object a.
struct FactorizationCategory {
  FiniteCategory total;
  std::vector<Variance> variance;
  std::vector<int> reverse;

  bool is_anti(int f) const { return variance[static_cast<std::size_t>(f)] == Variance::anti; }
  int reverse_of(int object) const { return reverse[static_cast<std::size_t>(object)]; }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int f : total.hom(a, b))
      if (!is_anti(f)) out.push_back(f);
    return out;
  }
  std::vector<int> an(int a, int b) const {
    std::vector<int> out;
    for (int f : total.hom(a, b))
      if (is_anti(f)) out.push_back(f);
    return out;
  }

  /// f∘1* on the source of f.
  int corresponding(int f) const { return total.compose(f, reverse_of(total.src(f))); }

  friend bool operator==(const FactorizationCategory&, const FactorizationCategory&) = default;
};

namespace detail {

[[noreturn]] inline void axiom(int number, const std::string& witness) {
  fail(ErrorKind::AxiomViolation, cat("axiom ", number, ": ", witness));
}

}  // namespace detail

/// Checks the factorial structure: (1) every arrow carries a tag and the
/// identities are straight; (2) composition follows the tag-XOR law on every
/// composable pair; (3) each reverse morphism is an anti endo-arrow and
/// commutes with straight arrows, f∘1*_A = 1*_B∘f; (4) associativity over all
/// composable triples. The straight part must itself be a category.
inline const FactorizationCategory& validate_factorization(const FactorizationCategory& fc) {
  const auto& c = fc.total;
  detail::check_shape(c);
  if (static_cast<int>(fc.variance.size()) != c.size())
    detail::axiom(1, cat(fc.variance.size(), " tags for ", c.size(), " arrows"));
  for (int a = 0; a < c.object_count(); ++a)
    if (fc.is_anti(c.id(a))) detail::axiom(1, cat("identity ", c.name(c.id(a)), " is tagged anti"));
  detail::check_identities(c);
  for (int g = 0; g < c.size(); ++g)
    for (int f = 0; f < c.size(); ++f) {
      if (c.dst(f) != c.src(g)) continue;
      int h = c.compose(g, f);
      Variance want = fc.variance[static_cast<std::size_t>(g)] ^ fc.variance[static_cast<std::size_t>(f)];
      if (fc.variance[static_cast<std::size_t>(h)] != want)
        detail::axiom(2, cat(c.name(g), " after ", c.name(f), " = ", c.name(h), " should be ", to_string(want)));
    }
  if (static_cast<int>(fc.reverse.size()) != c.object_count())
    detail::axiom(3, cat(fc.reverse.size(), " reverse morphisms for ", c.object_count(), " objects"));
  for (int a = 0; a < c.object_count(); ++a) {
    int r = fc.reverse_of(a);
    if (r < 0 || r >= c.size() || !fc.is_anti(r) || c.src(r) != a || c.dst(r) != a)
      detail::axiom(3, cat("reverse morphism of ", c.objects[static_cast<std::size_t>(a)], " is not in An(A, A)"));
  }
  for (int f = 0; f < c.size(); ++f) {
    if (fc.is_anti(f)) continue;
    int left = c.compose(f, fc.reverse_of(c.src(f)));
    int right = c.compose(fc.reverse_of(c.dst(f)), f);
    if (left != right) detail::axiom(3, cat(c.name(f), " after 1* = ", c.name(left), " but 1* after ", c.name(f), " = ", c.name(right)));
  }
  if (auto w = detail::associativity_witness(c, [&](int h, int g, int f) {
        return fc.is_anti(h) || fc.is_anti(g) || fc.is_anti(f);
      }))
    detail::axiom(4, *w);
  if (auto w = detail::associativity_witness(c, [](int, int, int) { return true; })) fail(ErrorKind::NotAssociative, *w);
  if (c.preadditive()) detail::check_additive(c);
  return fc;
}

/// Canonical factorial structure: anti-morphisms are tagged copies f* of the
/// arrows, placed after them, and composition is the underlying composition
/// with tags combined by XOR. 1*_A is the copy of id_A.
inline FactorizationCategory caf(const FiniteCategory& c) {
  const int n = c.size();
  std::vector<Arrow> arrows = c.arrows;
  for (const auto& a : c.arrows) arrows.push_back(Arrow{a.name + "*", a.src, a.dst});
  FactorizationCategory fc;
  fc.total = make_category(c.objects, std::move(arrows), c.identities, [&](int g, int f) {
    int base = c.compose(g % n, f % n);
    bool tag = (g >= n) != (f >= n);
    return base + (tag ? n : 0);
  });
  if (c.preadditive())
    set_sum(fc.total, [&](int x, int y) {
      if ((x >= n) != (y >= n)) return -1;
      return c.add(x % n, y % n) + (x >= n ? n : 0);
    });
  fc.variance.assign(static_cast<std::size_t>(n), Variance::straight);
  fc.variance.resize(static_cast<std::size_t>(2 * n), Variance::anti);
  for (int id : c.identities) fc.reverse.push_back(id + n);
  fc.total.label = c.label;
  return fc;
}

namespace detail {

/// The category on the selected arrows (in order) of `c`, with composition
/// given by `rule` on original indices.
template <class Rule>
FiniteCategory restrict_arrows(const FiniteCategory& c, const std::vector<int>& keep, std::vector<int> identities,
                               Rule rule) {
  std::vector<int> local(static_cast<std::size_t>(c.size()), -1);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    arrows.push_back(c.arrows[static_cast<std::size_t>(keep[i])]);
  }
  for (int& e : identities) e = local[static_cast<std::size_t>(e)];
  auto out = make_category(c.objects, std::move(arrows), std::move(identities), [&](int g, int f) {
    int h = rule(keep[static_cast<std::size_t>(g)], keep[static_cast<std::size_t>(f)]);
    int l = local[static_cast<std::size_t>(h)];
    if (l < 0) fail(ErrorKind::NotClosed, cat(c.name(h), " leaves the selected arrows"));
    return l;
  });
  out.label = c.label;
  if (c.preadditive())
    set_sum(out, [&](int x, int y) {
      return local[static_cast<std::size_t>(c.add(keep[static_cast<std::size_t>(x)], keep[static_cast<std::size_t>(y)]))];
    });
  return out;
}

inline std::vector<int> arrows_with(const FactorizationCategory& fc, Variance v) {
  std::vector<int> out;
  for (int f = 0; f < fc.total.size(); ++f)
    if (fc.variance[static_cast<std::size_t>(f)] == v) out.push_back(f);
  return out;
}

}  // namespace detail

/// Forgets the anti-morphisms: the straight arrows in their original order.
inline FiniteCategory fca(const FactorizationCategory& fc) {
  return detail::restrict_arrows(fc.total, detail::arrows_with(fc, Variance::straight), fc.total.identities,
                                 [&](int g, int f) { return fc.total.compose(g, f); });
}

/// Anti-morphisms under g ⋆ f = g∘f∘1*, with the reverse morphisms as
/// identities. Throws AxiomViolation when the result is not a category.
inline FiniteCategory anti_category(const FactorizationCategory& fc) {
  FiniteCategory out;
  try {
    out = detail::restrict_arrows(fc.total, detail::arrows_with(fc, Variance::anti), fc.reverse, [&](int g, int f) {
      return fc.total.compose(fc.total.compose(g, f), fc.reverse_of(fc.total.src(f)));
    });
    out.label = fc.total.label + "^An";
    validate_category(out);
  } catch (const AlgebraError& e) {
    fail(ErrorKind::AxiomViolation, cat("star composition: ", e.what()));
  }
  return out;
}

/// Hom and An together under the mixed composition.
inline FiniteCategory associated_category(const FactorizationCategory& fc) {
  return validate_category(fc.total);
}

/// Construction from a generator (C, D): `dictionary[d]` is the arrow of C
/// matched with arrow d of D, and must be an identity-on-objects functor that
/// is bijective on every hom-set. An(A, B) is Hom_D(A, B) and mixed
/// composites are transported through the dictionary.
inline FactorizationCategory merge_generator(const FiniteCategory& c, const FiniteCategory& d,
                                             const std::vector<int>& dictionary) {
  const int n = c.size();
  if (d.objects != c.objects) fail(ErrorKind::PreconditionFailed, "generator categories differ on objects");
  if (static_cast<int>(dictionary.size()) != d.size() || d.size() != n)
    fail(ErrorKind::PreconditionFailed, "dictionary is not a bijection of arrows");
  std::vector<int> back(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < d.size(); ++x) {
    int y = dictionary[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n || back[static_cast<std::size_t>(y)] >= 0 || c.src(y) != d.src(x) || c.dst(y) != d.dst(x))
      fail(ErrorKind::PreconditionFailed, cat("dictionary entry for ", d.name(x), " is not a hom-set bijection"));
    back[static_cast<std::size_t>(y)] = x;
  }
  for (int g = 0; g < d.size(); ++g)
    for (int f = 0; f < d.size(); ++f)
      if (d.dst(f) == d.src(g) &&
          dictionary[static_cast<std::size_t>(d.compose(g, f))] !=
              c.compose(dictionary[static_cast<std::size_t>(g)], dictionary[static_cast<std::size_t>(f)]))
        fail(ErrorKind::PreconditionFailed, cat("dictionary is not a functor at ", d.name(g), " after ", d.name(f)));
  auto to_c = [&](int x) { return x < n ? x : dictionary[static_cast<std::size_t>(x - n)]; };
  std::vector<Arrow> arrows = c.arrows;
  for (const auto& a : d.arrows) arrows.push_back(a);
  FactorizationCategory fc;
  fc.total = make_category(c.objects, std::move(arrows), c.identities, [&](int g, int f) {
    int base = c.compose(to_c(g), to_c(f));
    bool tag = (g >= n) != (f >= n);
    return tag ? n + back[static_cast<std::size_t>(base)] : base;
  });
  fc.variance.assign(static_cast<std::size_t>(n), Variance::straight);
  fc.variance.resize(static_cast<std::size_t>(2 * n), Variance::anti);
  for (int e : d.identities) fc.reverse.push_back(e + n);
  fc.total.label = c.label;
  return validate_factorization(fc);
}

/// Arrow bijection from `a` onto `b` that fixes straight arrows by index and
/// preserves tags, reverse morphisms and all composites, if one exists. Anti
/// arrows are matched through their corresponding straight arrow f*∘1*.
inline std::optional<std::vector<int>> tag_renaming(const FactorizationCategory& a, const FactorizationCategory& b) {
  if (a.total.size() != b.total.size() || a.total.objects != b.total.objects || a.variance != b.variance)
    return std::nullopt;
  const int n = a.total.size();
  std::map<int, int> b_by_straight;
  for (int f = 0; f < n; ++f)
    if (b.is_anti(f)) b_by_straight[b.corresponding(f)] = f;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  for (int f = 0; f < n; ++f) {
    if (!a.is_anti(f)) {
      map[static_cast<std::size_t>(f)] = f;
      continue;
    }
    auto it = b_by_straight.find(a.corresponding(f));
    if (it == b_by_straight.end()) return std::nullopt;
    map[static_cast<std::size_t>(f)] = it->second;
  }
  for (int o = 0; o < a.total.object_count(); ++o)
    if (map[static_cast<std::size_t>(a.reverse_of(o))] != b.reverse_of(o)) return std::nullopt;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (a.total.dst(f) == a.total.src(g) &&
          map[static_cast<std::size_t>(a.total.compose(g, f))] !=
              b.total.compose(map[static_cast<std::size_t>(g)], map[static_cast<std::size_t>(f)]))
        return std::nullopt;
  return map;
}

/// Two-sided inverse of f in c, if any.
inline std::optional<int> inverse_arrow(const FiniteCategory& c, int f) {
  for (int g : c.hom(c.dst(f), c.src(f)))
    if (c.compose(g, f) == c.id(c.src(f)) && c.compose(f, g) == c.id(c.dst(f))) return g;
  return std::nullopt;
}

/// Anti-inverse of the anti-morphism a: an anti g with g∘a and a∘g identities.
inline std::optional<int> anti_inverse(const FactorizationCategory& fc, int a) {
  const auto& c = fc.total;
  for (int g : fc.an(c.dst(a), c.src(a)))
    if (c.compose(g, a) == c.id(c.src(a)) && c.compose(a, g) == c.id(c.dst(a))) return g;
  return std::nullopt;
}

/// Iso/anti-iso correspondence on every arrow and every pair of objects:
/// f is iso iff f∘1* is an anti-iso, with anti-inverse f⁻¹∘1*; objects are
/// isomorphic iff anti-isomorphic; |Hom.Is| = |An.Is| per pair.
inline TheoremReport verify_iso_correspondence(const FactorizationCategory& fc) {
  TheoremReport r;
  r.theorem = "iso-anti-iso-correspondence";
  const auto& c = fc.total;
  bool iff = true, inverse_ok = true, objects_ok = true, counts_ok = true;
  std::string w_iff, w_inv, w_obj, w_cnt;
  for (int f = 0; f < c.size(); ++f) {
    if (fc.is_anti(f)) continue;
    auto inv = inverse_arrow(c, f);
    int star = fc.corresponding(f);
    auto anti_inv = anti_inverse(fc, star);
    if (inv.has_value() != anti_inv.has_value() && iff) {
      iff = false;
      w_iff = c.name(f);
    }
    if (inv && anti_inv && fc.corresponding(*inv) != *anti_inv && inverse_ok) {
      inverse_ok = false;
      w_inv = c.name(f);
    }
  }
  for (int a = 0; a < c.object_count(); ++a)
    for (int b = 0; b < c.object_count(); ++b) {
      int isos = 0, anti_isos = 0;
      for (int f : fc.hom(a, b)) isos += inverse_arrow(c, f).has_value();
      for (int g : fc.an(a, b)) anti_isos += anti_inverse(fc, g).has_value();
      if ((isos > 0) != (anti_isos > 0) && objects_ok) {
        objects_ok = false;
        w_obj = cat(c.objects[static_cast<std::size_t>(a)], ", ", c.objects[static_cast<std::size_t>(b)]);
      }
      if (isos != anti_isos && counts_ok) {
        counts_ok = false;
        w_cnt = cat(c.objects[static_cast<std::size_t>(a)], ", ", c.objects[static_cast<std::size_t>(b)], ": ", isos, " vs ", anti_isos);
      }
    }
  r.check("iso-iff-anti-iso", iff, w_iff);
  r.check("anti-inverse-is-inverse-star", inverse_ok, w_inv);
  r.check("isomorphic-iff-anti-isomorphic", objects_ok, w_obj);
  r.check("iso-counts-match", counts_ok, w_cnt);
  return r;
}

/// Every straight f is a∘1* for some anti a, in particular for a = f∘1*
/// when 1*∘1* is the identity; grouping composable anti pairs by
/// their composite partitions them with [f] nonempty for every f, including
/// through the middle object equal to the source.
inline TheoremReport verify_law_of_factorization(const FactorizationCategory& fc) {
  TheoremReport r;
  r.theorem = "law-of-factorization";
  const auto& c = fc.total;
  bool recon = true, exists = true, partition = true, nonempty = true;
  std::string w_recon, w_exists, w_part, w_empty;
  for (int f = 0; f < c.size(); ++f) {
    if (fc.is_anti(f)) continue;
    auto an = fc.an(c.src(f), c.dst(f));
    if (std::none_of(an.begin(), an.end(), [&](int a) { return c.compose(a, fc.reverse_of(c.src(f))) == f; }) && exists) {
      exists = false;
      w_exists = c.name(f);
    }
    int star = fc.corresponding(f);
    if (c.compose(star, fc.reverse_of(c.src(f))) != f && recon) {
      recon = false;
      w_recon = c.name(f);
    }
  }
  const int m = c.object_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d) {
        std::map<int, int> class_size;
        std::size_t pairs = 0;
        for (int x : fc.an(a, b))
          for (int y : fc.an(b, d)) {
            int h = c.compose(y, x);
            ++pairs;
            if (fc.is_anti(h) && partition) {
              partition = false;
              w_part = cat(c.name(y), " after ", c.name(x), " is anti");
            }
            ++class_size[h];
          }
        std::size_t total = 0;
        for (const auto& [h, k] : class_size) total += static_cast<std::size_t>(k);
        if (total != pairs && partition) {
          partition = false;
          w_part = "class sizes do not add up";
        }
        if (a == b)
          for (int f : fc.hom(a, d))
            if (!class_size.count(f) && nonempty) {
              nonempty = false;
              w_empty = c.name(f);
            }
      }
  r.check("factors-through-reverse", exists, w_exists);
  r.check("straight-equals-star-after-reverse", recon, w_recon);
  r.check("classes-partition-anti-pairs", partition, w_part);
  r.check("every-class-nonempty", nonempty, w_empty);
  return r;
}

/// Star-composition laws: associativity, 1* as two-sided unit, and
/// f* ⋆ (f⁻¹)* = 1* for isomorphisms f.
inline TheoremReport verify_star_laws(const FactorizationCategory& fc) {
  TheoremReport r;
  r.theorem = "star-composition-laws";
  const auto& c = fc.total;
  auto star = [&](int g, int f) { return c.compose(c.compose(g, f), fc.reverse_of(c.src(f))); };
  auto anti = detail::arrows_with(fc, Variance::anti);
  bool assoc = true, unit = true, inv = true;
  std::string wa, wu, wi;
  for (int f : anti)
    for (int g : anti) {
      if (c.dst(f) != c.src(g)) continue;
      for (int h : anti)
        if (c.dst(g) == c.src(h) && star(h, star(g, f)) != star(star(h, g), f) && assoc) {
          assoc = false;
          wa = cat("(", c.name(h), ", ", c.name(g), ", ", c.name(f), ")");
        }
    }
  for (int f : anti)
    if ((star(f, fc.reverse_of(c.src(f))) != f || star(fc.reverse_of(c.dst(f)), f) != f) && unit) {
      unit = false;
      wu = c.name(f);
    }
  for (int f = 0; f < c.size(); ++f) {
    if (fc.is_anti(f)) continue;
    if (auto g = inverse_arrow(c, f))
      if (star(fc.corresponding(f), fc.corresponding(*g)) != fc.reverse_of(c.dst(f)) && inv) {
        inv = false;
        wi = c.name(f);
      }
  }
  r.check("star-associative", assoc, wa);
  r.check("reverse-is-star-unit", unit, wu);
  r.check("star-inverse-gives-reverse", inv, wi);
  return r;
}

}  // namespace antihom
