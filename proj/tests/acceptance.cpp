// Acceptance run: one PASS/FAIL line per criterion, with wall time and limit.
// Exit status is 0 iff every criterion passes, except those named with
// --allow-red, which are still printed as FAIL.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "antihom/antihom.hpp"
#include "oracle.hpp"

using namespace antihom;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      lines.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { lines.push_back(s); }
};

struct Criterion {
  int number;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<void(Outcome&)> body;
};

bool has_check(const TheoremReport& r, const std::string& name, bool pass) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass == pass;
  return false;
}

std::vector<FiniteGroup> groups() { return detail::corpus_groups(builtin_corpus()); }
std::vector<FiniteRing> rings() { return detail::corpus_rings(builtin_corpus()); }

void variance_table(Outcome& o) {
  auto r = verify_variance_table(groups(), 8);
  o.require(r.pass(), r.first_failure());
  o.note(r.notes.front());
}

void correspondence(Outcome& o) {
  long scanned = 0;
  for (const auto& a : groups())
    for (const auto& b : groups()) {
      auto pair = a.name() + "->" + b.name();
      auto homs = enumerate_homs(a, b).size();
      auto an = enumerate_antihoms(a, b).size();
      o.require(homs == an, pair + " counts " + std::to_string(homs) + " vs " + std::to_string(an));
      if (a.order() > 6 || b.order() > 6) continue;
      auto brute = oracle::group_counts(a, b);
      o.require(brute.straight == static_cast<long>(homs) && brute.anti == static_cast<long>(an),
                pair + " disagrees with full scan");
      ++scanned;
    }
  o.note(std::to_string(scanned) + " pairs cross-checked by full map-space scan");
}

void end_s3(Outcome& o) {
  auto s3 = builtin_corpus().group("S3")->group;
  auto brute = oracle::group_counts(s3, s3);
  auto homs = enumerate_homs(s3, s3).size();
  auto an = enumerate_antihoms(s3, s3).size();
  o.require(static_cast<long>(homs) == brute.straight, "straight count");
  o.require(static_cast<long>(an) == brute.anti && an == homs, "anti count");
  auto m = verify_star_monoid(s3);
  o.require(m.pass(), m.first_failure());
  o.note("|End(S3)| = " + std::to_string(homs) + ", |An(S3,S3)| = " + std::to_string(an) + ", " + m.notes.back());
}

void factorization_law(Outcome& o) {
  long pairs = 0;
  for (const auto& a : groups())
    for (const auto& b : groups()) {
      auto r = verify_factorization_law(a, b);
      o.require(r.pass(), a.name() + "->" + b.name() + ": " + r.first_failure());
      ++pairs;
    }
  for (const auto& a : rings())
    for (const auto& b : rings()) {
      auto r = verify_factorization_law(a, b);
      o.require(r.pass(), "ring " + a.name() + "->" + b.name() + ": " + r.first_failure());
      ++pairs;
    }
  o.note(std::to_string(pairs) + " Hom-sets reconstructed");
}

void theorem_instances(Outcome& o) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.theorems = {"anti-factorization", "anti-homomorphism", "second-anti-iso", "third-anti-iso", "subring-transport"};
  auto b = run(cfg);
  o.require(!b.records.empty(), "no records");
  for (const auto& r : b.records) o.require(r.pass, r.id + " " + r.check + " " + r.witness);
  std::set<std::string> ids;
  long unique = 0;
  for (const auto& r : b.records) {
    ids.insert(r.id);
    if (r.check == "unique" && r.pass) ++unique;
  }
  for (const char* want : {"S3", "D4", "Z4", "T2F2"}) {
    bool seen = false;
    for (const auto& id : ids) seen |= id.find(want) != std::string::npos;
    o.require(seen, std::string("instance on ") + want);
  }
  o.note(std::to_string(ids.size()) + " instances, " + std::to_string(b.records.size()) + " checks, " +
         std::to_string(unique) + " uniqueness checks");
}

void automorphisms(Outcome& o) {
  auto alg = automorphism_algebra(builtin_corpus().group("S3")->group);
  o.require(alg.report.pass(), alg.report.first_failure());
  o.require(has_check(alg.report, "correspondence-is-isomorphism", true), "explicit isomorphism");
  o.require(alg.union_group.order() == 12, "union order");
  o.require(has_check(alg.report, "automorphisms-normal-in-union", true), "normality");
  o.require(has_check(alg.report, "index-two", true), "index two");
  o.require(has_check(alg.report, "disjoint", true), "disjointness");
  o.note("union order " + std::to_string(alg.union_group.order()));
}

// Closure of the additive (anti-)multiplicative maps under a pointwise
// operation, by full scan.
bool scan_closed(const FiniteRing& a, const FiniteRing& b, bool anti, bool sum) {
  std::vector<std::vector<int>> maps;
  oracle::for_each_table(a.order(), b.order(), [&](const std::vector<int>& f) {
    if (oracle::ring_map(a, b, f, anti, false)) maps.push_back(f);
  });
  for (const auto& f : maps)
    for (const auto& g : maps) {
      std::vector<int> h(f.size());
      for (std::size_t x = 0; x < h.size(); ++x) h[x] = sum ? b.add(f[x], g[x]) : b.mul(f[x], g[x]);
      if (!oracle::ring_map(a, b, h, anti, false)) return false;
    }
  return true;
}

void pointwise_audit(Outcome& o) {
  auto rs = rings();
  std::vector<std::string> red;
  long agree = 0;
  for (const auto& a : rs)
    for (const auto& b : rs) {
      auto r = pointwise_ring_audit(a, b);
      double space = std::pow(static_cast<double>(b.order()), a.order());
      if (space <= 1e6) {
        for (bool anti : {false, true})
          for (bool sum : {true, false}) {
            std::string name = std::string(anti ? "an" : "hom") + "-closed-under-" + (sum ? "sum" : "product");
            o.require(has_check(r, name, scan_closed(a, b, anti, sum)), a.name() + "->" + b.name() + " " + name);
            ++agree;
          }
      }
      if (is_commutative(b) && !r.pass()) red.push_back(a.name() + "->" + b.name());
    }
  auto t2 = builtin_corpus().ring("T2F2")->ring;
  auto rt = pointwise_ring_audit(t2, t2);
  o.require(!rt.pass() && !rt.first_failure().empty(), "T2F2 counterexample with witness");
  o.note("T2F2->T2F2 witness: " + rt.first_failure());
  o.note(std::to_string(agree) + " audit verdicts agree with a full-scan closure oracle");
  o.require(red.empty(), "audit passes on every commutative target");
  if (!red.empty()) {
    std::string list;
    for (const auto& p : red) list += (list.empty() ? "" : ", ") + p;
    o.note(std::to_string(red.size()) + " commutative-target pairs with closure counterexamples: " + list);
    o.note("pointwise sums of ring maps are not multiplicative in general (id + id = 2x on Z4)");
  }
}

void semilinear(Outcome& o) {
  FieldFq2 f(2);
  std::mt19937_64 rng(1);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    Variance t = rng() % 2 ? Variance::anti : Variance::straight;
    SemilinearMap m{random_matrix(f, rows, cols, rng), t};
    SemilinearMap h{random_matrix(f, cols, 1 + static_cast<int>(rng() % 4), rng), rng() % 2 ? Variance::anti : Variance::straight};
    auto id = "map " + std::to_string(i) + " " + render(f, m);
    auto basics = verify_semilinear_basics(f, m);
    o.require(basics.pass(), id + ": " + basics.first_failure());
    o.require(has_check(basics, "rank-nullity", true) && has_check(basics, "factor-sequence-composite", true), id);
    auto twist = verify_twist_law(f, m, h);
    o.require(twist.pass() && has_check(twist, "matrix-law", true), id + " twist: " + twist.first_failure());
    auto ah = verify_generalized_anti_hom(f, m);
    o.require(ah.pass(), id + " anti-hom: " + ah.first_failure());
    auto ker = kernel_basis(f, m);
    if (!ker.empty()) {
      SemilinearMap mu{Matrix::from_columns(cols, ker), Variance::straight};
      auto af = verify_generalized_anti_factorization(f, m, mu);
      o.require(af.pass(), id + " anti-factorization: " + af.first_failure());
    }
    ++checked;
  }
  for (int n = 1; n <= 4; ++n)
    for (int cdim = 0; cdim <= n; ++cdim)
      for (int bdim = cdim; bdim <= n; ++bdim) {
        std::vector<std::vector<int>> bs, cs;
        for (int k = 0; k < bdim; ++k) {
          std::vector<int> e(static_cast<std::size_t>(n), 0);
          e[static_cast<std::size_t>(k)] = 1 + static_cast<int>(rng() % 3);
          bs.push_back(e);
          if (k < cdim) cs.push_back(e);
        }
        auto r = verify_generalized_second_iso(f, n, bs, cs);
        o.require(r.pass(), "second-iso n=" + std::to_string(n) + ": " + r.first_failure());
      }
  auto nat = an_bifunctor_check(f, 1, {1, 2});
  o.require(nat.pass(), "naturality: " + nat.first_failure());
  o.note(std::to_string(checked) + " seeded maps over F4 up to 4x4");
}

void category_engine(Outcome& o) {
  auto c = builtin_corpus();
  auto plain = detail::plain_categories(c, false);
  auto additive = detail::plain_categories(c, true);
  std::vector<FiniteCategory> all = plain;
  all.insert(all.end(), additive.begin(), additive.end());
  for (const auto& x : all) {
    o.require(fca(caf(x)) == x, x.label + " fca after caf");
    auto fc = caf(x);
    o.require(caf(fca(fc)) == fc, x.label + " caf after fca");
    auto eq = check_equivalence(anti_functor(fc), fca(fc), anti_category(fc));
    o.require(eq.pass(), x.label + " equivalence: " + eq.first_failure());
  }
  for (const auto& n : c.categories)
    if (n.factorization) o.require(caf(fca(*n.factorization)) == *n.factorization, n.category.label + " caf after fca");
  long products = 0;
  for (const auto& x : plain) {
    auto fc = caf(x);
    for (const auto& fam : detail::families(x)) {
      if (detail::products_in(fc, fam).empty()) continue;
      auto r = anti_product_uniqueness(fc, fam);
      o.require(r.pass(), x.label + " products: " + r.first_failure());
      ++products;
    }
  }
  o.require(products > 0, "product families found");
  auto adj = check_adjunctions(plain);
  o.require(adj.pass(), "adjunctions: " + adj.first_failure());
  auto adj_add = check_adjunctions(additive, true);
  o.require(adj_add.pass(), "additive adjunctions: " + adj_add.first_failure());
  long pairs = 0;
  for (const auto& a : plain)
    for (const auto& b : plain) {
      o.require(static_cast<long>(enumerate_functors(a, b).size()) == oracle::functor_count(a, b),
                a.label + "->" + b.label + " functor count");
      ++pairs;
    }
  auto arrow = builtin::arrow_category();
  o.require(enumerate_functors(arrow, arrow).size() == 3, "three endofunctors of the arrow category");
  o.note(std::to_string(products) + " product families, " + std::to_string(pairs) + " functor counts cross-checked");
  for (const auto& n : adj.notes) o.note(n);
}

void determinism(Outcome& o) {
  RunConfig cfg;
  cfg.command = "report";
  cfg.format = "records";
  auto first = emit_records(run(cfg));
  auto second = emit_records(run(cfg));
  o.require(first == second, "byte-identical records");
  o.require(parse_records(first) == run(cfg), "records parse back to the bundle");
  o.note(std::to_string(first.size()) + " bytes");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allow_red;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--allow-red" && i + 1 < argc) allow_red.insert(std::atoi(argv[++i]));

  const std::vector<Criterion> criteria{
      {1, "variance-table", 60, variance_table},
      {2, "correspondence", 0, correspondence},
      {3, "end-s3", 0, end_s3},
      {4, "law-of-factorization", 0, factorization_law},
      {5, "theorem-instances", 120, theorem_instances},
      {6, "automorphism-algebra", 0, automorphisms},
      {7, "pointwise-ring-audit", 0, pointwise_audit},
      {8, "semilinear", 30, semilinear},
      {9, "category-engine", 120, category_engine},
      {10, "determinism", 0, determinism},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) o.require(secs < c.limit_s, "time limit");
    std::ostringstream head;
    head << std::fixed << std::setprecision(2) << c.number << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name
         << " (" << secs << " s";
    if (c.limit_s > 0) head << ", limit " << c.limit_s << " s";
    head << ")";
    if (!o.pass && allow_red.count(c.number)) head << " [allowed red]";
    std::cout << head.str() << "\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
    if (!o.pass && !allow_red.count(c.number)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
