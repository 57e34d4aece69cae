#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "audit.hpp"
#include "automorphism.hpp"
#include "builtin.hpp"
#include "category.hpp"
#include "enumerate.hpp"
#include "functor.hpp"
#include "io.hpp"
#include "laws.hpp"
#include "products.hpp"
#include "records.hpp"
#include "semilinear.hpp"
#include "theorems.hpp"

namespace antihom {

struct LoadFailure {
  std::string path;
  AlgebraError error;
};

struct Corpus {
  std::vector<NamedGroup> groups;
  std::vector<NamedRing> rings;
  std::vector<MapSpec> maps;
  std::vector<NamedSemilinear> semilinear;
  std::vector<NamedCategory> categories;
  std::vector<LoadFailure> failures;

  const NamedGroup* group(const std::string& name) const {
    for (const auto& g : groups)
      if (g.group.name() == name) return &g;
    return nullptr;
  }
  const NamedRing* ring(const std::string& name) const {
    for (const auto& r : rings)
      if (r.ring.name() == name) return &r;
    return nullptr;
  }
  const MapSpec* map(const std::string& name) const {
    for (const auto& m : maps)
      if (m.name == name) return &m;
    return nullptr;
  }

  void add(Structure s) {
    std::visit(
        [&](auto&& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, NamedGroup>) groups.push_back(std::move(v));
          else if constexpr (std::is_same_v<T, NamedRing>) rings.push_back(std::move(v));
          else if constexpr (std::is_same_v<T, MapSpec>) maps.push_back(std::move(v));
          else if constexpr (std::is_same_v<T, NamedSemilinear>) semilinear.push_back(std::move(v));
          else categories.push_back(std::move(v));
        },
        std::move(s));
  }
};

/// The bundled corpus as (file name, contents) pairs. Loading these texts
/// is how the built-in corpus is constructed, so an exported directory and
/// the built-in corpus always agree.
inline std::vector<std::pair<std::string, std::string>> corpus_files() {
  using namespace builtin;
  using Gens = std::vector<std::pair<std::string, std::vector<int>>>;
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("z2.grp", write_group(cyclic(2)));
  out.emplace_back("z3.grp", write_group(cyclic(3)));
  out.emplace_back("z4.grp", write_group(cyclic(4), Gens{{"Z2", {2}}}));
  out.emplace_back("z6.grp", write_group(cyclic(6), Gens{{"Z2", {3}}, {"Z3", {2}}}));
  out.emplace_back("s3.grp", write_group(s3(), Gens{{"A3", {3}}, {"C2", {1}}}));
  out.emplace_back("d4.grp", write_group(d4(), Gens{{"R", {1}}, {"R2", {2}}, {"S", {4}}, {"V", {2, 4}}}));
  out.emplace_back("q8.grp", write_group(q8(), Gens{{"Z", {1}}, {"I", {2}}}));
  out.emplace_back("z2xz2.grp", write_group(klein(), Gens{{"A", {1}}}));

  out.emplace_back("z2.rng", write_ring(zn_ring(2)));
  out.emplace_back("z4.rng", write_ring(zn_ring(4), Gens{{"I", {2}}}));
  out.emplace_back("f4.rng", write_ring(f4_ring()));
  out.emplace_back("z2xz2.rng", write_ring(klein_ring(), Gens{{"E", {1}}}));
  out.emplace_back("t2f2.rng", write_ring(t2_ring(), Gens{{"U", {2}}, {"D", {1}}}));
  out.emplace_back("m2f2.rng", write_ring(m2_ring()));

  out.emplace_back("signstar.map", write_map({"signstar", "S3", "Z2", Variance::anti, {0, 1, 1, 0, 0, 1}}));
  out.emplace_back("s3inv.map", write_map({"s3inv", "S3", "S3", Variance::anti, {0, 1, 2, 4, 3, 5}}));
  out.emplace_back("d4mod.map", write_map({"d4mod", "D4", "Z2", Variance::anti, {0, 0, 0, 0, 1, 1, 1, 1}}));
  out.emplace_back("z4mod2.map", write_map({"z4mod2", "ring:Z4", "ring:Z2", Variance::anti, {0, 1, 0, 1}}));
  {
    std::vector<int> diag(8);
    for (int x = 0; x < 8; ++x) diag[static_cast<std::size_t>(x)] = ((x >> 2) & 1) + 2 * (x & 1);
    out.emplace_back("t2diag.map", write_map({"t2diag", "ring:T2F2", "ring:Z2xZ2", Variance::anti, diag}));
  }
  out.emplace_back("t2swap.map", write_map({"t2swap", "ring:T2F2", "ring:T2F2", Variance::anti, t2_ring().involution_table()}));
  out.emplace_back("m2transpose.map",
                   write_map({"m2transpose", "ring:M2F2", "ring:M2F2", Variance::anti, m2_ring().involution_table()}));

  {
    FieldFq2 f4(2);
    Matrix m(2, 3);
    m.data = {1, 2, 0, 0, 3, 1};
    out.emplace_back("twist23.slm", write_semilinear("twist23", f4, SemilinearMap{m, Variance::anti}));
    FieldFq2 f9(3);
    Matrix n(2, 2);
    n.data = {1, 3, 0, 1};
    out.emplace_back("f9shear.slm", write_semilinear("f9shear", f9, SemilinearMap{n, Variance::anti}));
  }

  out.emplace_back("arrow.cat", write_category(arrow_category()));
  out.emplace_back("chain3.cat", write_category(chain3()));
  out.emplace_back("meet.cat", write_category(meet_semilattice()));
  out.emplace_back("bz2.cat", write_category(monoid_category(cyclic(2))));
  out.emplace_back("rz2.cat", write_category(ring_category(zn_ring(2))));
  out.emplace_back("t2cat.cat", write_category(upper_triangular_category()));
  out.emplace_back("arrow.fcat", write_factorization(caf(arrow_category())));
  return out;
}

inline Corpus builtin_corpus() {
  Corpus c;
  auto files = corpus_files();
  // same order as loading the exported directory
  std::sort(files.begin(), files.end());
  for (const auto& [name, text] : files) c.add(parse_structure_text(text, name));
  return c;
}

/// Files and directories (read in sorted order). Unreadable or invalid
/// files are collected as failures rather than thrown.
inline Corpus load_corpus(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  Corpus c;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> inside;
      for (const auto& e : fs::directory_iterator(p, ec))
        if (e.is_regular_file()) inside.push_back(e.path().string());
      std::sort(inside.begin(), inside.end());
      files.insert(files.end(), inside.begin(), inside.end());
    } else {
      files.push_back(p);
    }
  }
  for (const auto& f : files) {
    try {
      c.add(parse_structure(f));
    } catch (const AlgebraError& e) {
      c.failures.push_back(LoadFailure{f, e});
    }
  }
  return c;
}

inline Corpus corpus_for(const RunConfig& cfg) { return cfg.corpus.empty() ? builtin_corpus() : load_corpus(cfg.corpus); }

/// Map endpoints name a group or a ring; `group:` and `ring:` prefixes
/// disambiguate, and an unprefixed name is looked up among groups first.
template <class S>
const S* resolve_endpoint(const Corpus& c, const std::string& name);

template <>
inline const FiniteGroup* resolve_endpoint<FiniteGroup>(const Corpus& c, const std::string& name) {
  if (name.rfind("ring:", 0) == 0) return nullptr;
  auto* g = c.group(name.rfind("group:", 0) == 0 ? name.substr(6) : name);
  return g ? &g->group : nullptr;
}

template <>
inline const FiniteRing* resolve_endpoint<FiniteRing>(const Corpus& c, const std::string& name) {
  if (name.rfind("group:", 0) == 0) return nullptr;
  bool qualified = name.rfind("ring:", 0) == 0;
  if (!qualified && c.group(name)) return nullptr;
  auto* r = c.ring(qualified ? name.substr(5) : name);
  return r ? &r->ring : nullptr;
}

struct ResolvedMap {
  std::optional<GroupMorphism> group;
  std::optional<RingMorphism> ring;
};

/// Throws ValidationError when the endpoints are unknown and LawViolation
/// when the table breaks the declared law.
inline ResolvedMap resolve_map(const Corpus& c, const MapSpec& m) {
  ResolvedMap out;
  auto* ga = resolve_endpoint<FiniteGroup>(c, m.source);
  auto* gb = resolve_endpoint<FiniteGroup>(c, m.target);
  if (ga && gb) {
    out.group = make_morphism(*ga, *gb, m.images, m.variance);
    return out;
  }
  auto* ra = resolve_endpoint<FiniteRing>(c, m.source);
  auto* rb = resolve_endpoint<FiniteRing>(c, m.target);
  if (ra && rb) {
    out.ring = make_morphism(*ra, *rb, m.images, m.variance);
    return out;
  }
  fail(ErrorKind::ValidationError, cat("map ", m.name, ": endpoints ", m.source, " -> ", m.target, " not in corpus"));
}

namespace detail {

inline std::string param(const RunConfig& cfg, const std::string& key, const std::string& fallback = "") {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Runs one unit of work and files its report; errors become FAIL records.
inline void run_unit(ReportBundle& b, const RunConfig& cfg, const std::string& suite, const std::string& id,
                     const std::function<TheoremReport()>& work) {
  auto start = std::chrono::steady_clock::now();
  try {
    TheoremReport r = work();
    std::optional<long> us;
    if (cfg.timing)
      us = static_cast<long>(
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
    b.add(suite, id, r, us);
  } catch (const AlgebraError& e) {
    b.add_error(suite, id, e);
  } catch (const std::exception& e) {
    b.records.push_back(Record{suite, id, "InternalError", {}, false, e.what(), "", std::nullopt});
  }
}

inline const NamedGroup& need_group(const Corpus& c, const std::string& name) {
  auto* g = c.group(name);
  if (!g) fail(ErrorKind::ValidationError, cat("no group named ", name, " in corpus"));
  return *g;
}

inline const NamedRing& need_ring(const Corpus& c, const std::string& name) {
  auto* r = c.ring(name);
  if (!r) fail(ErrorKind::ValidationError, cat("no ring named ", name, " in corpus"));
  return *r;
}

inline Subgroup need_subgroup(const NamedGroup& g, const std::string& name) {
  if (auto s = g.subgroup(name)) return *s;
  fail(ErrorKind::ValidationError, cat("group ", g.group.name(), " declares no subgroup ", name));
}

inline RingIdeal need_ideal(const NamedRing& r, const std::string& name) {
  if (auto s = r.ideal(name)) return *s;
  fail(ErrorKind::ValidationError, cat("ring ", r.ring.name(), " declares no ideal ", name));
}

/// A map named on the command line: a corpus map name or a file path.
inline ResolvedMap need_map(const Corpus& c, const std::string& name) {
  if (const auto* m = c.map(name)) return resolve_map(c, *m);
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) {
    auto s = parse_structure(name);
    if (auto* m = std::get_if<MapSpec>(&s)) return resolve_map(c, *m);
    fail(ErrorKind::ValidationError, cat(name, " is not a map file"));
  }
  auto stem = std::filesystem::path(name).stem().string();
  if (const auto* m = c.map(stem)) return resolve_map(c, *m);
  fail(ErrorKind::ValidationError, cat("no map named ", name));
}

template <class S>
std::vector<std::pair<S, S>> ordered_pairs(const std::vector<S>& xs) {
  std::vector<std::pair<S, S>> out;
  for (const auto& a : xs)
    for (const auto& b : xs) out.emplace_back(a, b);
  return out;
}

inline std::vector<FiniteGroup> corpus_groups(const Corpus& c) {
  std::vector<FiniteGroup> out;
  for (const auto& g : c.groups) out.push_back(g.group);
  return out;
}

inline std::vector<FiniteRing> corpus_rings(const Corpus& c, bool with_involution = false) {
  std::vector<FiniteRing> out;
  for (const auto& r : c.rings)
    if (!with_involution || r.ring.has_involution()) out.push_back(r.ring);
  return out;
}

inline std::vector<FiniteCategory> plain_categories(const Corpus& c, bool preadditive) {
  std::vector<FiniteCategory> out;
  for (const auto& n : c.categories)
    if (!n.factorization && n.category.preadditive() == preadditive) out.push_back(n.category);
  return out;
}

/// Factorization categories: the corpus files plus caf of every plain one.
inline std::vector<FactorizationCategory> factorization_categories(const Corpus& c) {
  std::vector<FactorizationCategory> out;
  for (const auto& n : c.categories) out.push_back(n.factorization ? *n.factorization : caf(n.category));
  return out;
}

inline std::string label_of(const FactorizationCategory& fc) { return fc.total.label; }

// ---------------------------------------------------------------------------
// validate

inline void suite_validate(ReportBundle& b, const RunConfig& cfg, const Corpus& c) {
  for (const auto& g : c.groups)
    run_unit(b, cfg, "validate", g.group.name(), [&] {
      TheoremReport r;
      r.inputs = {g.group.name()};
      r.check("group-axioms", true);
      r.notes.push_back(cat("order ", g.group.order(), is_abelian(g.group) ? ", abelian" : ", non-abelian"));
      for (const auto& [name, s] : g.subgroups)
        r.notes.push_back(cat("subgroup ", name, " ", format_list(s.members), is_normal(g.group, s) ? " normal" : " not normal"));
      return r;
    });
  for (const auto& n : c.rings)
    run_unit(b, cfg, "validate", n.ring.name(), [&] {
      TheoremReport r;
      r.inputs = {n.ring.name()};
      r.check("ring-axioms", true);
      r.notes.push_back(cat("order ", n.ring.order(), is_commutative(n.ring) ? ", commutative" : ", non-commutative",
                            n.ring.has_involution() ? ", with involution" : ""));
      for (const auto& [name, s] : n.ideals) r.notes.push_back(cat("ideal ", name, " ", format_list(s.members)));
      return r;
    });
  for (const auto& m : c.maps)
    run_unit(b, cfg, "validate", m.name, [&] {
      TheoremReport r;
      r.inputs = {m.source, m.target, to_string(m.variance)};
      try {
        auto rm = resolve_map(c, m);
        r.check("obeys-declared-law", true);
        r.notes.push_back(cat("classification ", to_string(rm.group ? classify(*rm.group) : classify(*rm.ring))));
      } catch (const AlgebraError& e) {
        if (e.kind() != ErrorKind::LawViolation) throw;
        r.check("obeys-declared-law", false, e.witness());
      }
      return r;
    });
  for (const auto& s : c.semilinear)
    run_unit(b, cfg, "validate", s.name, [&] { return verify_semilinear_basics(FieldFq2(s.p), s.map); });
  for (const auto& n : c.categories)
    run_unit(b, cfg, "validate", n.category.label, [&] {
      TheoremReport r;
      r.inputs = {n.category.label};
      r.check("category-axioms", true);
      r.notes.push_back(cat(n.category.object_count(), " objects, ", n.category.size(), " arrows",
                            n.category.preadditive() ? ", preadditive" : ""));
      if (n.factorization) {
        r.check("factorization-axioms", true);
        bool canonical = tag_renaming(caf(fca(*n.factorization)), *n.factorization).has_value();
        r.notes.push_back(canonical ? "structure agrees with caf of its straight part"
                                    : "structure differs from caf of its straight part");
      }
      return r;
    });
}

// ---------------------------------------------------------------------------
// enum

template <class S>
void enum_pairs(ReportBundle& b, const RunConfig& cfg, const std::vector<std::pair<S, S>>& pairs, Variance v) {
  const std::string tag = v == Variance::straight ? "Hom" : "An";
  const bool list = param(cfg, "list") == "yes";
  for (const auto& [a, t] : pairs) {
    auto id = cat(tag, "(", a.name(), ",", t.name(), ")");
    try {
      auto maps = enumerate(a, t, v, cfg.bound);
      b.records.push_back(Record{"enum", id, "count", {a.name(), t.name()}, true, "", cat(maps.size()), std::nullopt});
      if (list)
        for (const auto& m : maps) b.notes.push_back(Note{"enum", id, format_list(m.images)});
    } catch (const AlgebraError& e) {
      b.add_error("enum", id, e, {a.name(), t.name()});
    }
  }
}

inline void suite_enum(ReportBundle& b, const RunConfig& cfg, const Corpus& c, Variance v) {
  auto from = param(cfg, "from"), to = param(cfg, "to");
  auto pick = [&](const std::string& name, auto&& all) {
    using S = typename std::decay_t<decltype(all)>::value_type;
    std::vector<S> out;
    for (const auto& x : all)
      if (name.empty() || x.name() == name) out.push_back(x);
    return out;
  };
  auto groups = corpus_groups(c);
  auto rings = corpus_rings(c);
  if (!from.empty() || !to.empty()) {
    // a named pair: groups take precedence over rings with the same name
    auto ga = pick(from, groups), gb = pick(to, groups);
    if (!ga.empty() && !gb.empty()) {
      std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs;
      for (const auto& a : ga)
        for (const auto& t : gb) pairs.emplace_back(a, t);
      enum_pairs(b, cfg, pairs, v);
      return;
    }
    auto ra = pick(from, rings), rb = pick(to, rings);
    if (ra.empty() || rb.empty()) {
      b.records.push_back(Record{"enum", cat(from, "->", to), "ValidationError", {from, to}, false,
                                 "no matching structures in corpus", "", std::nullopt});
      return;
    }
    std::vector<std::pair<FiniteRing, FiniteRing>> pairs;
    for (const auto& a : ra)
      for (const auto& t : rb) pairs.emplace_back(a, t);
    enum_pairs(b, cfg, pairs, v);
    return;
  }
  enum_pairs(b, cfg, ordered_pairs(groups), v);
  enum_pairs(b, cfg, ordered_pairs(rings), v);
}

// ---------------------------------------------------------------------------
// verify

inline std::vector<std::string> theorem_ids() {
  return {"variance-table",    "correspondence", "star-monoid",     "law-of-factorization",  "anti-factorization",
          "anti-homomorphism", "second-anti-iso", "third-anti-iso", "abelian-collapse",      "subring-transport",
          "automorphism-algebra", "semilinear"};
}

inline void semilinear_suite(ReportBundle& b, const RunConfig& cfg, const FieldFq2& f, int count) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<SemilinearMap> maps;
  for (int i = 0; i < count; ++i) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    int rk = static_cast<int>(rng() % static_cast<unsigned>(std::min(rows, cols) + 1));
    Variance t = rng() % 2 ? Variance::anti : Variance::straight;
    maps.push_back(SemilinearMap{random_matrix_of_rank(f, rows, cols, rk, rng), t});
  }
  const std::string field = f.name();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& m = maps[i];
    auto id = cat(field, " map ", i);
    run_unit(b, cfg, "verify", id, [&] {
      TheoremReport r = verify_semilinear_basics(f, m);
      r.absorb(verify_generalized_anti_hom(f, m), "anti-hom: ");
      auto ker = kernel_basis(f, m);
      SemilinearMap mu{Matrix::from_columns(m.source_dim(), ker), Variance::straight};
      if (!ker.empty()) r.absorb(verify_generalized_anti_factorization(f, m, mu), "anti-factorization: ");
      const auto& next = maps[(i + 1) % maps.size()];
      if (next.target_dim() == m.source_dim()) r.absorb(verify_twist_law(f, m, next), "twist: ");
      if (m.source_dim() <= 2 && m.target_dim() <= 2 && f.size() == 4) r.absorb(verify_anti_mono_epi(f, m), "mono-epi: ");
      return r;
    });
  }
  // C in B in F^n from seeded spanning vectors
  for (int n = 1; n <= 4; ++n)
    run_unit(b, cfg, "verify", cat(field, " second-iso dim ", n), [&] {
      std::uniform_int_distribution<int> d(0, f.size() - 1);
      auto vec = [&] {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int& x : v) x = d(rng);
        return v;
      };
      std::vector<std::vector<int>> cs, bs;
      for (int k = 0; k < n / 2; ++k) cs.push_back(vec());
      bs = cs;
      for (int k = 0; k < (n + 1) / 2; ++k) bs.push_back(vec());
      return verify_generalized_second_iso(f, n, bs, cs);
    });
  run_unit(b, cfg, "verify", cat(field, " bifunctor"), [&] { return an_bifunctor_check(f, cfg.seed); });
  run_unit(b, cfg, "verify", cat(field, " hom-union"), [&] { return hom_union_not_group(f); });
}

inline void verify_one(ReportBundle& b, const RunConfig& cfg, const Corpus& c, const std::string& id) {
  const long bound = cfg.bound;
  auto groups = corpus_groups(c);
  auto rings = corpus_rings(c, true);
  auto gname = param(cfg, "group"), rname = param(cfg, "ring"), sub = param(cfg, "normal"), mname = param(cfg, "map");
  auto subs = split(param(cfg, "sub"));

  if (id == "variance-table") {
    run_unit(b, cfg, "verify", "variance-table groups", [&] { return verify_variance_table(groups, 8, bound); });
  } else if (id == "correspondence" || id == "law-of-factorization") {
    bool corr = id == "correspondence";
    for (const auto& [a, t] : ordered_pairs(groups))
      run_unit(b, cfg, "verify", cat(id, " ", a.name(), "->", t.name()), [&] {
        return corr ? verify_correspondence(a, t, bound) : verify_factorization_law(a, t, bound);
      });
    for (const auto& [a, t] : ordered_pairs(rings))
      run_unit(b, cfg, "verify", cat(id, " ring ", a.name(), "->", t.name()), [&] {
        return corr ? verify_correspondence(a, t, bound) : verify_factorization_law(a, t, bound);
      });
  } else if (id == "star-monoid") {
    for (const auto& g : groups)
      if (gname.empty() || g.name() == gname)
        run_unit(b, cfg, "verify", cat("star-monoid ", g.name()), [&] { return verify_star_monoid(g, bound); });
  } else if (id == "anti-factorization") {
    auto one = [&](const std::string& g, const std::string& n, const std::string& m, bool ring) {
      run_unit(b, cfg, "verify", cat("anti-factorization ", g, "/", n, " ", m), [&] {
        auto rm = need_map(c, m);
        if (ring) {
          const auto& nr = need_ring(c, g);
          if (!rm.ring) fail(ErrorKind::ValidationError, cat(m, " is not a ring map"));
          return verify_anti_factorization(nr.ring, need_ideal(nr, n), *rm.ring, bound);
        }
        const auto& ng = need_group(c, g);
        if (!rm.group) fail(ErrorKind::ValidationError, cat(m, " is not a group map"));
        return verify_anti_factorization(ng.group, need_subgroup(ng, n), *rm.group, bound);
      });
    };
    if (!gname.empty()) one(gname, sub, mname, false);
    else if (!rname.empty()) one(rname, sub, mname, true);
    else {
      one("S3", "A3", "signstar", false);
      one("D4", "R", "d4mod", false);
      one("Z4", "I", "z4mod2", true);
      one("T2F2", "U", "t2diag", true);
    }
  } else if (id == "anti-homomorphism" || id == "subring-transport" || id == "abelian-collapse") {
    std::vector<std::string> names;
    if (!mname.empty()) names.push_back(mname);
    else
      for (const auto& m : c.maps) {
        // without --map, each verifier takes the corpus maps of its own kind
        bool ring = resolve_endpoint<FiniteRing>(c, m.source) != nullptr;
        if ((id == "abelian-collapse" && ring) || (id == "subring-transport" && !ring)) continue;
        names.push_back(m.name);
      }
    for (const auto& m : names)
      run_unit(b, cfg, "verify", cat(id, " ", m), [&] {
        auto rm = need_map(c, m);
        if (id == "anti-homomorphism") return rm.group ? verify_anti_hom_theorem(*rm.group, bound) : verify_anti_hom_theorem(*rm.ring, bound);
        if (id == "abelian-collapse") {
          if (!rm.group) fail(ErrorKind::PreconditionFailed, cat(m, " is not a group map"));
          return verify_abelian_collapse(*rm.group);
        }
        if (!rm.ring) fail(ErrorKind::PreconditionFailed, cat(m, " is not a ring map"));
        return verify_subring_and_transport(*rm.ring);
      });
    if (id == "abelian-collapse" && mname.empty())
      for (const auto& [a, t] : ordered_pairs(groups))
        if (a.order() <= 6 && t.order() <= 6)
          run_unit(b, cfg, "verify", cat("abelian-collapse ", a.name(), "->", t.name()),
                   [&] { return verify_abelian_collapse_all(a, t, bound); });
  } else if (id == "second-anti-iso" || id == "third-anti-iso") {
    bool second = id == "second-anti-iso";
    auto one = [&](const std::string& g, const std::string& x, const std::string& y) {
      run_unit(b, cfg, "verify", cat(id, " ", g, " ", x, " ", y), [&] {
        const auto& ng = need_group(c, g);
        auto sx = x == "1" ? trivial_subgroup(ng.group) : x == "G" ? whole_group(ng.group) : need_subgroup(ng, x);
        auto sy = y == "1" ? trivial_subgroup(ng.group) : y == "G" ? whole_group(ng.group) : need_subgroup(ng, y);
        return second ? verify_second_anti_iso(ng.group, sx, sy, bound) : verify_third_anti_iso(ng.group, sx, sy, bound);
      });
    };
    if (!gname.empty()) {
      if (subs.size() != 2) {
        b.records.push_back(Record{"verify", id, "PreconditionFailed", {gname}, false,
                                   "--sub takes two comma-separated subgroup names", "", std::nullopt});
        return;
      }
      one(gname, subs[0], subs[1]);
    } else if (second) {
      one("S3", "G", "A3");
      one("S3", "A3", "1");
      one("D4", "R", "R2");
      one("D4", "G", "R");
      one("D4", "V", "R2");
    } else {
      one("S3", "C2", "A3");
      one("D4", "S", "R2");
      one("D4", "S", "R");
      one("D4", "R", "V");
    }
  } else if (id == "automorphism-algebra") {
    for (const auto& g : groups)
      if (gname.empty() || g.name() == gname)
        run_unit(b, cfg, "verify", cat("automorphism-algebra ", g.name()), [&] { return automorphism_algebra(g, bound).report; });
  } else if (id == "semilinear") {
    semilinear_suite(b, cfg, FieldFq2(2), 60);
    semilinear_suite(b, cfg, FieldFq2(3), 12);
    for (const auto& s : c.semilinear)
      run_unit(b, cfg, "verify", cat("semilinear ", s.name), [&] {
        FieldFq2 f(s.p);
        auto r = verify_semilinear_basics(f, s.map);
        r.absorb(verify_generalized_anti_hom(f, s.map), "anti-hom: ");
        return r;
      });
  } else {
    b.records.push_back(Record{"verify", id, "PreconditionFailed", {}, false,
                               cat("unknown theorem id; known: ", format_list(theorem_ids())), "", std::nullopt});
  }
}

// ---------------------------------------------------------------------------
// cat

inline std::vector<std::string> category_ops() { return {"caf", "fca", "anti", "assoc", "equiv", "products", "adjunction"}; }

/// Unary and binary families of objects (pairs unordered, repeats allowed).
inline std::vector<std::vector<int>> families(const FiniteCategory& c) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < c.object_count(); ++i) out.push_back({i});
  for (int i = 0; i < c.object_count(); ++i)
    for (int j = i; j < c.object_count(); ++j) out.push_back({i, j});
  return out;
}

inline std::string family_text(const FiniteCategory& c, const std::vector<int>& fam) {
  std::vector<std::string> names;
  for (int x : fam) names.push_back(c.objects[static_cast<std::size_t>(x)]);
  return format_list(names);
}

inline void preservation(ReportBundle& b, const RunConfig& cfg, const FactorizationCategory& fc,
                         const FactorizationCategory& fd) {
  run_unit(b, cfg, "cat", cat("products preservation ", label_of(fc), "->", label_of(fd)), [&] {
    TheoremReport r;
    r.inputs = {label_of(fc), label_of(fd)};
    auto functors = enumerate_factorable(fc, fd);
    long images = 0, non_product = 0;
    bool ok = true;
    std::string w;
    auto plain = fca(fc);
    for (const auto& f : functors)
      for (const auto& fam : families(plain)) {
        if (detail::products_in(fc, fam).empty()) continue;
        auto rep = check_antiproduct_preservation(f, fc, fd, fam);
        for (std::size_t i = 0;; ++i) {
          auto* is_prod = rep.find(cat("presentation ", i, ": image-is-product"));
          if (!is_prod) break;
          ++images;
          if (!is_prod->pass) {
            ++non_product;
            continue;
          }
          auto prefix = cat("presentation ", i, ": image ");
          for (const auto& ch : rep.checks)
            if (ch.name.rfind(prefix, 0) == 0 && !ch.pass && ok) {
              ok = false;
              w = cat("functor ", format_list(f.arrows), " family ", family_text(plain, fam), ": ", ch.name, ": ", ch.witness);
            }
        }
        for (const auto& ch : rep.checks)
          if (ch.name.rfind("presentation ", 0) != 0 && !ch.pass && ok) {
            ok = false;
            w = cat("functor ", format_list(f.arrows), ": ", ch.name, ": ", ch.witness);
          }
      }
    r.check("anti-universal-on-product-images", ok, w);
    r.notes.push_back(cat(functors.size(), " factorable functors, ", images, " image presentations, ", non_product,
                          " of them not products"));
    return r;
  });
}

inline void cat_op(ReportBundle& b, const RunConfig& cfg, const Corpus& c, const std::string& op) {
  auto wanted = param(cfg, "category");
  auto fcs = factorization_categories(c);
  auto keep = [&](const std::string& label) { return wanted.empty() || wanted == label; };

  if (op == "caf") {
    for (const auto& n : c.categories)
      if (!n.factorization && keep(n.category.label))
        run_unit(b, cfg, "cat", cat("caf ", n.category.label), [&] {
          TheoremReport r;
          r.inputs = {n.category.label};
          auto fc = caf(n.category);
          validate_factorization(fc);
          r.check("caf-satisfies-axioms", true);
          r.check("fca-after-caf-is-identity", fca(fc) == n.category);
          r.check("caf-after-fca-is-identity", caf(fca(fc)) == fc);
          r.notes.push_back(cat(fc.total.size(), " arrows after adding anti copies"));
          return r;
        });
  } else if (op == "fca") {
    for (const auto& fc : fcs)
      if (keep(label_of(fc)))
        run_unit(b, cfg, "cat", cat("fca ", label_of(fc)), [&] {
          TheoremReport r;
          r.inputs = {label_of(fc)};
          auto straight = fca(fc);
          validate_category(straight);
          r.check("straight-part-is-category", true);
          r.check("fca-after-caf-after-fca-is-fca", fca(caf(straight)) == straight);
          bool canonical = tag_renaming(caf(straight), fc).has_value();
          r.notes.push_back(canonical ? "caf of the straight part recovers the structure up to renaming"
                                      : "caf of the straight part does not recover the structure");
          return r;
        });
  } else if (op == "anti") {
    for (const auto& fc : fcs)
      if (keep(label_of(fc)))
        run_unit(b, cfg, "cat", cat("anti ", label_of(fc)), [&] {
          TheoremReport r;
          r.inputs = {label_of(fc)};
          auto an = anti_category(fc);
          r.check("anti-category-valid", true);
          r.absorb(verify_star_laws(fc), "");
          r.absorb(verify_iso_correspondence(fc), "");
          r.notes.push_back(cat(an.label, ": ", an.object_count(), " objects, ", an.size(), " arrows"));
          return r;
        });
  } else if (op == "assoc") {
    for (const auto& fc : fcs)
      if (keep(label_of(fc)))
        run_unit(b, cfg, "cat", cat("assoc ", label_of(fc)), [&] {
          TheoremReport r;
          r.inputs = {label_of(fc)};
          auto a = associated_category(fc);
          r.check("associated-category-valid", true);
          r.absorb(verify_law_of_factorization(fc), "");
          r.notes.push_back(cat(a.size(), " arrows"));
          return r;
        });
  } else if (op == "equiv") {
    for (const auto& fc : fcs)
      if (keep(label_of(fc)))
        run_unit(b, cfg, "cat", cat("equiv ", label_of(fc)), [&] {
          auto r = check_equivalence(anti_functor(fc), fca(fc), anti_category(fc));
          r.inputs = {label_of(fc)};
          return r;
        });
  } else if (op == "products") {
    for (const auto& fc : fcs) {
      if (!keep(label_of(fc))) continue;
      auto plain = fca(fc);
      for (const auto& fam : families(plain)) {
        auto id = cat("products ", label_of(fc), " ", family_text(plain, fam));
        if (detail::products_in(fc, fam).empty()) {
          b.notes.push_back(Note{"cat", cat("products ", label_of(fc)), cat("no product for ", family_text(plain, fam))});
          continue;
        }
        run_unit(b, cfg, "cat", id, [&] {
          auto r = anti_product_uniqueness(fc, fam);
          r.inputs = {label_of(fc), family_text(plain, fam)};
          return r;
        });
      }
    }
    auto plains = plain_categories(c, false);
    for (const auto& x : plains)
      for (const auto& y : plains)
        if (keep(x.label)) preservation(b, cfg, caf(x), caf(y));
  } else if (op == "adjunction") {
    run_unit(b, cfg, "cat", "adjunction", [&] { return check_adjunctions(plain_categories(c, false)); });
    auto pre = plain_categories(c, true);
    if (!pre.empty())
      run_unit(b, cfg, "cat", "adjunction preadditive", [&] { return check_adjunctions(pre, true); });
  } else {
    b.records.push_back(Record{"cat", op, "PreconditionFailed", {}, false,
                               cat("unknown operation; known: ", format_list(category_ops())), "", std::nullopt});
  }
}

// ---------------------------------------------------------------------------
// audit

inline std::vector<std::string> audit_ids() { return {"pointwise-ring", "natural-an-map"}; }

inline void audit_one(ReportBundle& b, const RunConfig& cfg, const Corpus& c, const std::string& id) {
  std::vector<FiniteRing> rings;
  auto rname = param(cfg, "ring");
  for (const auto& r : c.rings)
    if (rname.empty() || r.ring.name() == rname) rings.push_back(r.ring);
  if (id == "pointwise-ring") {
    auto target = param(cfg, "to");
    for (const auto& a : rings)
      for (const auto& t : c.rings)
        if ((target.empty() && (rname.empty() || t.ring.name() == rname)) || t.ring.name() == target)
          run_unit(b, cfg, "audit", cat("pointwise-ring ", a.name(), "->", t.ring.name()),
                   [&] { return pointwise_ring_audit(a, t.ring, cfg.bound); });
  } else if (id == "natural-an-map") {
    for (const auto& n : c.rings)
      if (rname.empty() || n.ring.name() == rname)
        for (const auto& [name, ideal] : n.ideals)
          run_unit(b, cfg, "audit", cat("natural-an-map ", n.ring.name(), "/", name),
                   [&] { return natural_an_map(n.ring, ideal, cfg.bound); });
  } else {
    b.records.push_back(Record{"audit", id, "PreconditionFailed", {}, false,
                               cat("unknown audit; known: ", format_list(audit_ids())), "", std::nullopt});
  }
}

}  // namespace detail

/// Executes the suites named by the config. Malformed input never escapes
/// as an exception: it is filed as a FAIL record.
inline ReportBundle run(const RunConfig& cfg) {
  ReportBundle b;
  b.config = cfg;
  if (cfg.bound <= 0) {
    b.records.push_back(Record{"config", "bound", "PreconditionFailed", {}, false, "bound must be positive", "", std::nullopt});
    return b;
  }
  Corpus c;
  try {
    c = corpus_for(cfg);
  } catch (const AlgebraError& e) {
    b.add_error("load", "corpus", e);
    return b;
  }
  for (const auto& f : c.failures) b.add_error("load", f.path, f.error);

  const auto& cmd = cfg.command;
  if (cmd == "validate") {
    detail::suite_validate(b, cfg, c);
  } else if (cmd == "enum-homs" || cmd == "enum-antihoms") {
    detail::suite_enum(b, cfg, c, cmd == "enum-homs" ? Variance::straight : Variance::anti);
  } else if (cmd == "verify") {
    for (const auto& id : cfg.theorems) detail::verify_one(b, cfg, c, id);
  } else if (cmd == "cat") {
    for (const auto& op : cfg.theorems) detail::cat_op(b, cfg, c, op);
  } else if (cmd == "audit") {
    for (const auto& id : cfg.theorems) detail::audit_one(b, cfg, c, id);
  } else if (cmd == "report") {
    detail::suite_validate(b, cfg, c);
    for (const auto& id : detail::theorem_ids()) detail::verify_one(b, cfg, c, id);
    for (const auto& op : detail::category_ops()) detail::cat_op(b, cfg, c, op);
    for (const auto& id : detail::audit_ids()) detail::audit_one(b, cfg, c, id);
  } else {
    b.records.push_back(Record{"config", "command", "PreconditionFailed", {}, false, cat("unknown command ", cmd), "", std::nullopt});
  }
  return b;
}

}  // namespace antihom
