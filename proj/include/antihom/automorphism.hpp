#pragma once

#include <map>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "report.hpp"

namespace antihom {

/// Bijective straight and anti self-maps of G with their group structures.
struct AutomorphismAlgebra {
  std::vector<GroupMorphism> automorphisms;       // canonical order
  std::vector<GroupMorphism> anti_automorphisms;  // canonical order
  FiniteGroup under_composition;                  // element i = automorphisms[i]
  FiniteGroup under_star;                         // element i = anti_automorphisms[i]
  std::vector<int> correspondence;                // automorphism i -> anti-automorphism index
  std::vector<std::vector<int>> union_tables;     // distinct image tables of both kinds
  FiniteGroup union_group;
  std::vector<int> automorphisms_in_union;        // indices into union_tables
  TheoremReport report;
};

namespace detail {

inline std::optional<FiniteGroup> try_group(const std::vector<std::vector<int>>& rows, const std::string& name,
                                            TheoremReport& r, const std::string& check) {
  try {
    FiniteGroup g = validate_group(rows, name);
    r.check(check, true);
    return g;
  } catch (const AlgebraError& e) {
    r.check(check, false, e.what());
    return std::nullopt;
  }
}

inline int index_of(const std::vector<GroupMorphism>& v, const std::vector<int>& images) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].images == images) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

inline AutomorphismAlgebra automorphism_algebra(const FiniteGroup& g, long bound = kDefaultBound) {
  AutomorphismAlgebra out;
  TheoremReport& r = out.report;
  r.theorem = "automorphism-algebra";
  r.inputs = {g.name()};
  r.uniqueness = Uniqueness::enumeration;

  for (auto& f : enumerate_homs(g, g, bound))
    if (is_bijective(f)) out.automorphisms.push_back(f);
  for (auto& f : enumerate_antihoms(g, g, bound))
    if (is_bijective(f)) out.anti_automorphisms.push_back(f);
  const int n = static_cast<int>(out.automorphisms.size());
  r.check("equal-sizes", n == static_cast<int>(out.anti_automorphisms.size()),
          cat(n, " automorphisms vs ", out.anti_automorphisms.size(), " anti-automorphisms"));

  std::vector<std::vector<int>> comp_rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> star_rows = comp_rows;
  bool closed = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = detail::index_of(out.automorphisms, compose(out.automorphisms[static_cast<std::size_t>(i)],
                                                            out.automorphisms[static_cast<std::size_t>(j)]).images);
      int s = static_cast<std::size_t>(n) == out.anti_automorphisms.size()
                  ? detail::index_of(out.anti_automorphisms,
                                     star_compose(out.anti_automorphisms[static_cast<std::size_t>(i)],
                                                  out.anti_automorphisms[static_cast<std::size_t>(j)]).images)
                  : -1;
      closed = closed && c >= 0 && s >= 0;
      comp_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
      star_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  if (!r.check("closure", closed, "a composite left the set")) return out;
  auto hg = detail::try_group(comp_rows, "Aut(" + g.name() + ")", r, "automorphisms-form-group");
  auto ag = detail::try_group(star_rows, "AntiAut(" + g.name() + ")", r, "anti-automorphisms-form-group-under-star");
  if (!hg || !ag) return out;
  out.under_composition = *hg;
  out.under_star = *ag;

  // f -> f after inversion, checked bijective and multiplicative.
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  bool bij = true;
  for (int i = 0; i < n; ++i) {
    int k = detail::index_of(out.anti_automorphisms, corresponding_anti(out.automorphisms[static_cast<std::size_t>(i)]).images);
    out.correspondence.push_back(k);
    if (k < 0 || hit[static_cast<std::size_t>(k)]) bij = false;
    else hit[static_cast<std::size_t>(k)] = 1;
  }
  r.check("correspondence-bijective", bij);
  if (bij) {
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = 0; j < n && bad.empty(); ++j) {
        int lhs = out.correspondence[static_cast<std::size_t>(hg->mul(i, j))];
        int rhs = ag->mul(out.correspondence[static_cast<std::size_t>(i)], out.correspondence[static_cast<std::size_t>(j)]);
        if (lhs != rhs) bad = cat("pair (", i, ",", j, ")");
      }
    r.check("correspondence-is-isomorphism", bad.empty(), bad);
    r.witnesses.push_back("correspondence " + format_list(out.correspondence));
  }

  // Union of both kinds as plain maps under composition.
  std::map<std::vector<int>, int> where;
  for (const auto* set : {&out.automorphisms, &out.anti_automorphisms})
    for (const auto& f : *set)
      if (where.emplace(f.images, 0).second) out.union_tables.push_back(f.images);
  std::sort(out.union_tables.begin(), out.union_tables.end());
  for (std::size_t i = 0; i < out.union_tables.size(); ++i) where[out.union_tables[i]] = static_cast<int>(i);
  const int u = static_cast<int>(out.union_tables.size());
  std::vector<std::vector<int>> urows(static_cast<std::size_t>(u), std::vector<int>(static_cast<std::size_t>(u)));
  bool uclosed = true;
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      std::vector<int> c(static_cast<std::size_t>(g.order()));
      for (int x = 0; x < g.order(); ++x)
        c[static_cast<std::size_t>(x)] =
            out.union_tables[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                out.union_tables[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
      auto it = where.find(c);
      uclosed = uclosed && it != where.end();
      urows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it == where.end() ? -1 : it->second;
    }
  if (!r.check("union-closed", uclosed)) return out;
  auto ug = detail::try_group(urows, "AutAnti(" + g.name() + ")", r, "union-forms-group");
  if (!ug) return out;
  out.union_group = *ug;
  for (const auto& f : out.automorphisms) out.automorphisms_in_union.push_back(where[f.images]);
  std::sort(out.automorphisms_in_union.begin(), out.automorphisms_in_union.end());
  Subgroup h{*ug, out.automorphisms_in_union};
  auto nw = normality_witness(*ug, h);
  r.check("automorphisms-normal-in-union", !nw.has_value(),
          nw ? cat("conjugator ", nw->first, " moves ", nw->second) : "");
  r.witnesses.push_back(cat("union order ", u, ", index ", n == 0 ? 0 : u / n));

  int common = 0;
  for (const auto& f : out.automorphisms)
    if (detail::index_of(out.anti_automorphisms, f.images) >= 0) ++common;
  if (is_abelian(g)) {
    r.check("abelian-sets-coincide", common == n, cat(common, " of ", n, " shared"));
  } else {
    r.check("disjoint", common == 0, cat(common, " maps are both"));
    r.check("index-two", u == 2 * n, cat("union order ", u, " vs ", n));
  }
  return out;
}

}  // namespace antihom
