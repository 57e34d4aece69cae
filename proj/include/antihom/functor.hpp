#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "category.hpp"
#include "error.hpp"
#include "report.hpp"

namespace antihom {

/// Object and arrow images of a functor between finite categories.
struct FunctorData {
  std::vector<int> objects;
  std::vector<int> arrows;
  friend bool operator==(const FunctorData&, const FunctorData&) = default;
  friend auto operator<=>(const FunctorData&, const FunctorData&) = default;
};

inline constexpr int kMaxFunctorObjects = 3;
inline constexpr int kMaxFunctorArrows = 8;

/// First failure of the functor laws, or nullopt.
inline std::optional<std::string> functor_violation(const FunctorData& f, const FiniteCategory& c,
                                                    const FiniteCategory& d) {
  if (static_cast<int>(f.objects.size()) != c.object_count() || static_cast<int>(f.arrows.size()) != c.size())
    return "wrong table sizes";
  for (int o : f.objects)
    if (o < 0 || o >= d.object_count()) return cat("object image ", o, " out of range");
  for (int x = 0; x < c.size(); ++x) {
    int y = f.arrows[static_cast<std::size_t>(x)];
    if (y < 0 || y >= d.size()) return cat("image of ", c.name(x), " out of range");
    if (d.src(y) != f.objects[static_cast<std::size_t>(c.src(x))] || d.dst(y) != f.objects[static_cast<std::size_t>(c.dst(x))])
      return cat("image of ", c.name(x), " has wrong endpoints");
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (f.arrows[static_cast<std::size_t>(c.id(o))] != d.id(f.objects[static_cast<std::size_t>(o)]))
      return cat("identity of ", c.objects[static_cast<std::size_t>(o)], " not preserved");
  for (int g = 0; g < c.size(); ++g)
    for (int h = 0; h < c.size(); ++h)
      if (c.dst(h) == c.src(g) &&
          f.arrows[static_cast<std::size_t>(c.compose(g, h))] !=
              d.compose(f.arrows[static_cast<std::size_t>(g)], f.arrows[static_cast<std::size_t>(h)]))
        return cat(c.name(g), " after ", c.name(h));
  return std::nullopt;
}

/// First pair whose sum is not preserved, or nullopt. Both categories must
/// be preadditive.
inline std::optional<std::string> additivity_violation(const FunctorData& f, const FiniteCategory& c,
                                                       const FiniteCategory& d) {
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (c.summable(x, y) &&
          f.arrows[static_cast<std::size_t>(c.add(x, y))] !=
              d.add(f.arrows[static_cast<std::size_t>(x)], f.arrows[static_cast<std::size_t>(y)]))
        return cat(c.name(x), " + ", c.name(y));
  return std::nullopt;
}

inline FunctorData identity_functor(const FiniteCategory& c) {
  FunctorData f;
  for (int o = 0; o < c.object_count(); ++o) f.objects.push_back(o);
  for (int x = 0; x < c.size(); ++x) f.arrows.push_back(x);
  return f;
}

/// g after f.
inline FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  FunctorData h;
  for (int o : f.objects) h.objects.push_back(g.objects[static_cast<std::size_t>(o)]);
  for (int x : f.arrows) h.arrows.push_back(g.arrows[static_cast<std::size_t>(x)]);
  return h;
}

inline void check_functor_bound(const FiniteCategory& c) {
  if (c.object_count() > kMaxFunctorObjects || c.size() > kMaxFunctorArrows)
    fail(ErrorKind::BoundExceeded, cat("functor search limited to ", kMaxFunctorObjects, " objects and ",
                                       kMaxFunctorArrows, " arrows; got ", c.object_count(), " and ", c.size()));
}

namespace detail {

/// Backtracking over object maps, then arrow images in index order. A pair
/// is checked as soon as it and its composite (or sum) are all assigned.
/// `allowed(x, y, objects)` filters candidate images of arrow x.
inline void search_functors(const FiniteCategory& c, const FiniteCategory& d, bool additive,
                            const std::function<bool(int, int, const std::vector<int>&)>& allowed,
                            const std::function<void(const FunctorData&)>& emit) {
  const int m = c.object_count(), n = c.size();
  if (m == 0) {
    emit(FunctorData{});
    return;
  }
  if (d.object_count() == 0) return;
  FunctorData f;
  f.objects.assign(static_cast<std::size_t>(m), 0);
  f.arrows.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  for (int o = 0; o < m; ++o) ids[static_cast<std::size_t>(c.id(o))] = o;

  auto consistent = [&](int k) {
    auto img = [&](int x) { return f.arrows[static_cast<std::size_t>(x)]; };
    for (int g = 0; g <= k; ++g)
      for (int h = 0; h <= k; ++h) {
        if (g != k && h != k) continue;
        if (c.dst(h) == c.src(g)) {
          int gh = c.compose(g, h);
          if (gh <= k && img(gh) != d.compose(img(g), img(h))) return false;
        }
        if (additive && c.summable(g, h)) {
          int s = c.add(g, h);
          if (s <= k && img(s) != d.add(img(g), img(h))) return false;
        }
      }
    // composites landing on k from earlier arrows
    for (int g = 0; g < k; ++g)
      for (int h = 0; h < k; ++h) {
        if (c.dst(h) == c.src(g) && c.compose(g, h) == k && img(k) != d.compose(img(g), img(h))) return false;
        if (additive && c.summable(g, h) && c.add(g, h) == k &&
            img(k) != d.add(img(g), img(h)))
          return false;
      }
    return true;
  };

  std::function<void(int)> assign = [&](int k) {
    if (k == n) {
      emit(f);
      return;
    }
    int a = f.objects[static_cast<std::size_t>(c.src(k))], b = f.objects[static_cast<std::size_t>(c.dst(k))];
    std::vector<int> cands;
    if (ids[static_cast<std::size_t>(k)] >= 0) cands.push_back(d.id(a));
    else cands = d.hom(a, b);
    for (int y : cands) {
      if (!allowed(k, y, f.objects)) continue;
      f.arrows[static_cast<std::size_t>(k)] = y;
      if (consistent(k)) assign(k + 1);
    }
    f.arrows[static_cast<std::size_t>(k)] = -1;
  };

  while (true) {
    assign(0);
    int i = 0;
    while (i < m && ++f.objects[static_cast<std::size_t>(i)] == d.object_count()) f.objects[static_cast<std::size_t>(i++)] = 0;
    if (i == m) break;
  }
}

}  // namespace detail

/// All functors c -> d (additive ones when `additive`), sorted. Refuses
/// categories beyond the functor bound.
inline std::vector<FunctorData> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d,
                                                   bool additive = false) {
  check_functor_bound(c);
  check_functor_bound(d);
  if (additive && !(c.preadditive() && d.preadditive()))
    fail(ErrorKind::PreconditionFailed, "additive functors need preadditive categories");
  std::vector<FunctorData> out;
  detail::search_functors(c, d, additive, [](int, int, const std::vector<int>&) { return true; },
                          [&](const FunctorData& f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

/// A factorable functor is a functor between the associated categories that
/// sends straight arrows to straight arrows, anti to anti, and 1*_x to
/// 1*_{Fx}, so that its anti part is the map induced by f ↦ f∘1*.
inline std::vector<FunctorData> enumerate_factorable(const FactorizationCategory& c, const FactorizationCategory& d,
                                                     bool additive = false) {
  check_functor_bound(fca(c));
  check_functor_bound(fca(d));
  std::vector<int> reverse_object(static_cast<std::size_t>(c.total.size()), -1);
  for (int o = 0; o < c.total.object_count(); ++o) reverse_object[static_cast<std::size_t>(c.reverse_of(o))] = o;
  std::vector<FunctorData> out;
  detail::search_functors(
      c.total, d.total, additive,
      [&](int x, int y, const std::vector<int>& objects) {
        if (c.is_anti(x) != d.is_anti(y)) return false;
        int o = reverse_object[static_cast<std::size_t>(x)];
        return o < 0 || y == d.reverse_of(objects[static_cast<std::size_t>(o)]);
      },
      [&](const FunctorData& f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks a candidate factorable functor condition by condition.
inline TheoremReport check_factorable(const FunctorData& f, const FactorizationCategory& c,
                                      const FactorizationCategory& d) {
  TheoremReport r;
  r.theorem = "factorable-functor";
  const auto& cc = c.total;
  const auto& dd = d.total;
  if (static_cast<int>(f.arrows.size()) != cc.size() || static_cast<int>(f.objects.size()) != cc.object_count()) {
    r.check("shape", false, "wrong table sizes");
    return r;
  }
  auto img = [&](int x) { return f.arrows[static_cast<std::size_t>(x)]; };
  auto fobj = [&](int o) { return f.objects[static_cast<std::size_t>(o)]; };
  bool endpoints = true, straight = true, anti = true, induced = true;
  std::string we, ws, wa, wi;
  for (int x = 0; x < cc.size(); ++x) {
    int y = img(x);
    if (y < 0 || y >= dd.size() || dd.src(y) != fobj(cc.src(x)) || dd.dst(y) != fobj(cc.dst(x))) {
      if (endpoints) we = cc.name(x);
      endpoints = false;
      continue;
    }
    if (!c.is_anti(x) && d.is_anti(y) && straight) {
      straight = false;
      ws = cc.name(x);
    }
    if (c.is_anti(x) && !d.is_anti(y) && anti) {
      anti = false;
      wa = cc.name(x);
    }
  }
  r.check("arrow-endpoints", endpoints, we);
  if (!endpoints) return r;
  for (int x = 0; x < cc.size(); ++x)
    if (!c.is_anti(x) && img(c.corresponding(x)) != dd.compose(img(x), d.reverse_of(fobj(cc.src(x)))) && induced) {
      induced = false;
      wi = cc.name(x);
    }
  r.check("underlying-straight", straight, ws);
  r.check("condition-I-anti-to-anti", anti, wa);
  r.check("anti-map-induced-by-star", induced, wi);
  // underlying functor laws on straight arrows, then the three mixed laws
  std::string w[4];
  bool ok[4] = {true, true, true, true};
  for (int o = 0; o < cc.object_count(); ++o)
    if (img(cc.id(o)) != dd.id(fobj(o)) && ok[0]) {
      ok[0] = false;
      w[0] = cat("identity of ", cc.objects[static_cast<std::size_t>(o)]);
    }
  for (int g = 0; g < cc.size(); ++g)
    for (int h = 0; h < cc.size(); ++h) {
      if (cc.dst(h) != cc.src(g)) continue;
      int kind = c.is_anti(g) ? (c.is_anti(h) ? 1 : 2) : (c.is_anti(h) ? 3 : 0);
      if (img(cc.compose(g, h)) != dd.compose(img(g), img(h)) && ok[kind]) {
        ok[kind] = false;
        w[kind] = cat("(", cc.name(g), ", ", cc.name(h), ")");
      }
    }
  r.check("underlying-functor", ok[0], w[0]);
  r.check("condition-II-anti-anti", ok[1], w[1]);
  r.check("condition-II-anti-straight", ok[2], w[2]);
  r.check("condition-II-straight-anti", ok[3], w[3]);
  return r;
}

/// Lift of a functor to the canonical structures: f* ↦ F(f)*.
inline FunctorData caf_functor(const FunctorData& f, const FiniteCategory& c, const FiniteCategory& d) {
  FunctorData out{f.objects, f.arrows};
  for (int x = 0; x < c.size(); ++x) out.arrows.push_back(f.arrows[static_cast<std::size_t>(x)] + d.size());
  return out;
}

namespace detail {

inline std::vector<int> local_index(const FactorizationCategory& fc, Variance v) {
  std::vector<int> local(static_cast<std::size_t>(fc.total.size()), -1);
  int k = 0;
  for (int x = 0; x < fc.total.size(); ++x)
    if (fc.variance[static_cast<std::size_t>(x)] == v) local[static_cast<std::size_t>(x)] = k++;
  return local;
}

}  // namespace detail

/// Underlying functor fca(c) -> fca(d) of a factorable functor.
inline FunctorData fca_functor(const FunctorData& f, const FactorizationCategory& c, const FactorizationCategory& d) {
  auto local = detail::local_index(d, Variance::straight);
  FunctorData out{f.objects, {}};
  for (int x = 0; x < c.total.size(); ++x)
    if (!c.is_anti(x)) out.arrows.push_back(local[static_cast<std::size_t>(f.arrows[static_cast<std::size_t>(x)])]);
  return out;
}

/// Comparison c -> caf(fca(c)): identity on straight arrows, a ↦ (a∘1*)*.
/// It is a functor exactly when c carries the canonical structure.
inline FunctorData canonical_comparison(const FactorizationCategory& c) {
  auto local = detail::local_index(c, Variance::straight);
  const int n = static_cast<int>(detail::arrows_with(c, Variance::straight).size());
  FunctorData out;
  for (int o = 0; o < c.total.object_count(); ++o) out.objects.push_back(o);
  for (int x = 0; x < c.total.size(); ++x)
    out.arrows.push_back(c.is_anti(x) ? n + local[static_cast<std::size_t>(c.corresponding(x))]
                                      : local[static_cast<std::size_t>(x)]);
  return out;
}

/// Inverse arrow table of a bijective functor.
inline FunctorData invert_functor(const FunctorData& f) {
  FunctorData out;
  out.objects.assign(f.objects.size(), -1);
  out.arrows.assign(f.arrows.size(), -1);
  for (std::size_t i = 0; i < f.objects.size(); ++i) out.objects[static_cast<std::size_t>(f.objects[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.arrows.size(); ++i) out.arrows[static_cast<std::size_t>(f.arrows[i])] = static_cast<int>(i);
  return out;
}

/// The functor f ↦ f∘1* from fca(c) to anti_category(c).
inline FunctorData anti_functor(const FactorizationCategory& c) {
  auto straight = detail::arrows_with(c, Variance::straight);
  auto local = detail::local_index(c, Variance::anti);
  FunctorData out;
  for (int o = 0; o < c.total.object_count(); ++o) out.objects.push_back(o);
  for (int x : straight) out.arrows.push_back(local[static_cast<std::size_t>(c.corresponding(x))]);
  return out;
}

/// Fully faithful (bijective on every hom-set) and essentially surjective
/// (every object of d isomorphic to an image), checked exhaustively.
inline TheoremReport check_equivalence(const FunctorData& f, const FiniteCategory& c, const FiniteCategory& d) {
  TheoremReport r;
  r.theorem = "equivalence";
  auto bad = functor_violation(f, c, d);
  r.check("is-functor", !bad, bad.value_or(""));
  if (bad) return r;
  bool faithful = true, full = true;
  std::string wf, wu;
  for (int a = 0; a < c.object_count(); ++a)
    for (int b = 0; b < c.object_count(); ++b) {
      std::set<int> images;
      for (int x : c.hom(a, b)) images.insert(f.arrows[static_cast<std::size_t>(x)]);
      auto pair = cat(c.objects[static_cast<std::size_t>(a)], ", ", c.objects[static_cast<std::size_t>(b)]);
      if (images.size() != c.hom(a, b).size() && faithful) {
        faithful = false;
        wf = pair;
      }
      if (images.size() != d.hom(f.objects[static_cast<std::size_t>(a)], f.objects[static_cast<std::size_t>(b)]).size() && full) {
        full = false;
        wu = pair;
      }
    }
  r.check("faithful", faithful, wf);
  r.check("full", full, wu);
  std::string ws;
  for (int y = 0; y < d.object_count() && ws.empty(); ++y) {
    bool hit = false;
    for (int o : f.objects)
      for (int x : d.hom(o, y))
        if (inverse_arrow(d, x)) hit = true;
    if (!hit) ws = d.objects[static_cast<std::size_t>(y)];
  }
  r.check("essentially-surjective", ws.empty(), ws);
  return r;
}

namespace detail {

struct AdjunctionTally {
  bool lands = true, injective = true, surjective = true, inverse = true, natural = true, counts = true;
  std::string w_lands, w_inj, w_surj, w_inv, w_nat, w_counts;
  long squares = 0;
};

inline void note_failure(bool& flag, std::string& witness, const std::string& w) {
  if (flag) witness = w;
  flag = false;
}

inline bool contains(const std::vector<FunctorData>& sorted, const FunctorData& f) {
  return std::binary_search(sorted.begin(), sorted.end(), f);
}

}  // namespace detail

/// Both adjunctions between forgetting and adding the canonical factorial
/// structure, on every pair drawn from `cats` (each used as a plain category
/// and, through caf, as a factorization category). For each pair the
/// functor sets are enumerated independently on both sides; the proof maps
/// are built, checked to be mutually inverse bijections, and every
/// naturality square over the corpus is compared. With `additive`, only
/// additive functors are admitted.
inline TheoremReport check_adjunctions(const std::vector<FiniteCategory>& cats, bool additive = false) {
  TheoremReport r;
  r.theorem = additive ? "caf-fca-adjunctions-preadditive" : "caf-fca-adjunctions";
  const std::size_t k = cats.size();
  std::vector<FactorizationCategory> fas;
  std::vector<FunctorData> to_canon, from_canon;
  bool canonical = true;
  std::string w_canon;
  for (const auto& c : cats) {
    check_functor_bound(c);
    fas.push_back(caf(c));
    if (fca(fas.back()) != c) detail::note_failure(canonical, w_canon, c.label);
    to_canon.push_back(canonical_comparison(fas.back()));
    if (functor_violation(to_canon.back(), fas.back().total, caf(fca(fas.back())).total))
      detail::note_failure(canonical, w_canon, "comparison is not a functor");
    from_canon.push_back(invert_functor(to_canon.back()));
  }
  r.check("canonical-structures", canonical, w_canon);
  if (!canonical) return r;

  // cat_hom[i][j] = Hom_Cat(cats[i], cats[j]); fa_hom[i][j] = Hom_Fa(fas[i], fas[j])
  std::vector<std::vector<std::vector<FunctorData>>> cat_hom(k, std::vector<std::vector<FunctorData>>(k)), fa_hom = cat_hom;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      cat_hom[i][j] = enumerate_functors(cats[i], cats[j], additive);
      fa_hom[i][j] = enumerate_factorable(fas[i], fas[j], additive);
      r.notes.push_back(cat(cats[i].label, " -> ", cats[j].label, ": ", cat_hom[i][j].size(), " functors, ",
                            fa_hom[i][j].size(), " factorable"));
    }

  // FCA left adjoint to CAF: xi(f) = CAF(f)∘g with g: C -> CAF(FCA(C)).
  auto xi1 = [&](std::size_t c, std::size_t d, const FunctorData& f) {
    return compose_functors(caf_functor(f, cats[c], cats[d]), to_canon[c]);
  };
  auto xi1_inv = [&](std::size_t c, std::size_t d, const FunctorData& f) {
    return fca_functor(compose_functors(from_canon[d], f), fas[c], fas[d]);
  };
  // CAF left adjoint to FCA: xi(f) = FCA(f); inverse g ↦ CAF(g).
  auto xi2 = [&](std::size_t c, std::size_t d, const FunctorData& f) { return fca_functor(f, fas[c], fas[d]); };
  auto xi2_inv = [&](std::size_t c, std::size_t d, const FunctorData& g) {
    return compose_functors(from_canon[d], caf_functor(g, cats[c], cats[d]));
  };

  detail::AdjunctionTally t1, t2;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      auto pair = cat(cats[c].label, " -> ", cats[d].label);
      const auto& hc = cat_hom[c][d];
      const auto& hf = fa_hom[c][d];
      if (hc.size() != hf.size()) {
        detail::note_failure(t1.counts, t1.w_counts, pair);
        detail::note_failure(t2.counts, t2.w_counts, pair);
      }
      for (auto* t : {&t1, &t2}) {
        bool first = t == &t1;
        std::set<FunctorData> images;
        for (const auto& f : (first ? hc : hf)) {
          auto img = first ? xi1(c, d, f) : xi2(c, d, f);
          if (!detail::contains(first ? hf : hc, img)) detail::note_failure(t->lands, t->w_lands, pair);
          images.insert(img);
          auto back = first ? xi1_inv(c, d, img) : xi2_inv(c, d, img);
          if (back != f) detail::note_failure(t->inverse, t->w_inv, pair);
        }
        if (images.size() != (first ? hc : hf).size()) detail::note_failure(t->injective, t->w_inj, pair);
        if (images.size() != (first ? hf : hc).size()) detail::note_failure(t->surjective, t->w_surj, pair);
        for (const auto& g : (first ? hf : hc)) {
          auto back = first ? xi1_inv(c, d, g) : xi2_inv(c, d, g);
          auto again = first ? xi1(c, d, back) : xi2(c, d, back);
          if (again != g) detail::note_failure(t->inverse, t->w_inv, pair);
        }
      }
    }

  // Naturality squares over every composable triple in the corpus.
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d)
      for (std::size_t c2 = 0; c2 < k; ++c2)
        for (std::size_t d2 = 0; d2 < k; ++d2) {
          auto where = cat(cats[c2].label, " -> ", cats[c].label, " -> ", cats[d].label, " -> ", cats[d2].label);
          // first adjunction: f in Cat(FCA C, D), g1 in Cat(D, D'), h in Fa(C', C)
          for (const auto& f : cat_hom[c][d]) {
            auto xf = xi1(c, d, f);
            for (const auto& g1 : cat_hom[d][d2])
              for (const auto& h : fa_hom[c2][c]) {
                auto lhs = xi1(c2, d2, compose_functors(compose_functors(g1, f), fca_functor(h, fas[c2], fas[c])));
                auto rhs = compose_functors(compose_functors(caf_functor(g1, cats[d], cats[d2]), xf), h);
                ++t1.squares;
                if (lhs != rhs) detail::note_failure(t1.natural, t1.w_nat, where);
              }
          }
          // second adjunction: f in Fa(CAF C, D), g in Fa(D, D'), h in Cat(C', C)
          for (const auto& f : fa_hom[c][d]) {
            auto xf = xi2(c, d, f);
            for (const auto& g : fa_hom[d][d2])
              for (const auto& h : cat_hom[c2][c]) {
                auto lhs = xi2(c2, d2, compose_functors(compose_functors(g, f), caf_functor(h, cats[c2], cats[c])));
                auto rhs = compose_functors(compose_functors(fca_functor(g, fas[d], fas[d2]), xf), h);
                ++t2.squares;
                if (lhs != rhs) detail::note_failure(t2.natural, t2.w_nat, where);
              }
          }
        }

  auto emit = [&](const std::string& prefix, const detail::AdjunctionTally& t) {
    r.check(prefix + "counts-match", t.counts, t.w_counts);
    r.check(prefix + "xi-lands-in-target", t.lands, t.w_lands);
    r.check(prefix + "xi-injective", t.injective, t.w_inj);
    r.check(prefix + "xi-surjective", t.surjective, t.w_surj);
    r.check(prefix + "xi-inverse", t.inverse, t.w_inv);
    r.check(prefix + "naturality", t.natural, t.w_nat);
    r.notes.push_back(cat(prefix, t.squares, " naturality squares compared"));
  };
  emit("fca-left-of-caf:", t1);
  emit("caf-left-of-fca:", t2);
  return r;
}

}  // namespace antihom
