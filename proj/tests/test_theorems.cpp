#include <functional>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "antihom/audit.hpp"
#include "antihom/automorphism.hpp"
#include "antihom/builtin.hpp"
#include "antihom/semilinear.hpp"
#include "antihom/theorems.hpp"
#include "oracle.hpp"

using namespace antihom;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ValidationError;
}

bool has_check(const TheoremReport& r, const std::string& name, bool pass) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass == pass;
  return false;
}

GroupMorphism signstar() { return make_morphism(builtin::s3(), builtin::cyclic(2), {0, 1, 1, 0, 0, 1}, Variance::anti); }

}  // namespace

TEST_CASE("anti map out of S3 factors uniquely through S3/A3") {
  auto s3 = builtin::s3();
  auto a3 = subgroup_closure(s3, {3});
  auto r = verify_anti_factorization(s3, a3, signstar());
  CHECK(r.pass());
  CHECK(has_check(r, "unique", true));

  // count the anti maps psi with psi(pi(x)) = phi(x) by scanning all tables
  auto q = quotient(s3, a3);
  long solutions = 0;
  oracle::for_each_table(q.group.order(), 2, [&](const std::vector<int>& psi) {
    if (!oracle::group_anti(q.group, builtin::cyclic(2), psi)) return;
    for (int x = 0; x < 6; ++x)
      if (psi[static_cast<std::size_t>(q.projection(x))] != signstar()(x)) return;
    ++solutions;
  });
  CHECK(solutions == 1);
}

TEST_CASE("anti-factorization preconditions are enforced") {
  auto s3 = builtin::s3();
  auto a3 = subgroup_closure(s3, {3});
  auto straight = builtin::s3_sign();
  CHECK(kind_of([&] { verify_anti_factorization(s3, a3, straight); }) == ErrorKind::PreconditionFailed);
  auto inv = make_morphism(s3, s3, {0, 1, 2, 4, 3, 5}, Variance::anti);
  CHECK(kind_of([&] { verify_anti_factorization(s3, a3, inv); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("anti-factorization holds for every anti map vanishing on a normal subgroup") {
  for (const auto& g : {builtin::s3(), builtin::d4(), builtin::q8(), builtin::cyclic(6)}) {
    for (const auto& target : {builtin::cyclic(2), builtin::klein(), builtin::s3()}) {
      for (const auto& phi : enumerate_antihoms(g, target)) {
        auto k = kernel(phi);
        REQUIRE(is_normal(g, k));
        INFO(describe(phi));
        CHECK(verify_anti_factorization(g, k, phi).pass());
      }
    }
  }
}

TEST_CASE("ring anti-factorization through Z4/2Z4") {
  auto z4 = builtin::zn_ring(4);
  auto i = ideal_closure(z4, {2});
  auto phi = make_morphism(z4, builtin::zn_ring(2), {0, 1, 0, 1}, Variance::anti);
  CHECK(verify_anti_factorization(z4, i, phi).pass());
}

TEST_CASE("anti homomorphism theorem on groups and rings") {
  for (const auto& g : builtin::groups())
    for (const auto& b : {builtin::cyclic(2), builtin::s3(), builtin::klein()})
      for (const auto& phi : enumerate_antihoms(g, b)) {
        INFO(describe(phi));
        CHECK(verify_anti_hom_theorem(phi).pass());
      }
  auto t2 = builtin::t2_ring();
  for (const auto& phi : enumerate_antihoms(t2, t2)) CHECK(verify_anti_hom_theorem(phi).pass());
  auto m2 = builtin::m2_ring();
  CHECK(verify_anti_hom_theorem(reverse_morphism(m2)).pass());
}

TEST_CASE("second anti isomorphism instances") {
  auto s3 = builtin::s3();
  auto d4 = builtin::d4();
  CHECK(verify_second_anti_iso(s3, whole_group(s3), subgroup_closure(s3, {3})).pass());
  CHECK(verify_second_anti_iso(s3, subgroup_closure(s3, {3}), trivial_subgroup(s3)).pass());
  CHECK(verify_second_anti_iso(d4, subgroup_closure(d4, {1}), subgroup_closure(d4, {2})).pass());
  CHECK(verify_second_anti_iso(d4, whole_group(d4), subgroup_closure(d4, {1})).pass());
  CHECK(verify_second_anti_iso(d4, subgroup_closure(d4, {2, 4}), subgroup_closure(d4, {2})).pass());
  CHECK(kind_of([&] {
          verify_second_anti_iso(d4, subgroup_closure(d4, {2}), subgroup_closure(d4, {1}));
        }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("third anti isomorphism instances") {
  auto s3 = builtin::s3();
  auto d4 = builtin::d4();
  CHECK(verify_third_anti_iso(s3, subgroup_closure(s3, {1}), subgroup_closure(s3, {3})).pass());
  CHECK(verify_third_anti_iso(d4, subgroup_closure(d4, {4}), subgroup_closure(d4, {2})).pass());
  CHECK(verify_third_anti_iso(d4, subgroup_closure(d4, {4}), subgroup_closure(d4, {1})).pass());
  CHECK(verify_third_anti_iso(d4, subgroup_closure(d4, {1}), subgroup_closure(d4, {2, 4})).pass());
}

TEST_CASE("automorphisms and anti-automorphisms of S3 form a group of order 12") {
  auto alg = automorphism_algebra(builtin::s3());
  CHECK(alg.report.pass());
  CHECK(alg.automorphisms.size() == 6);
  CHECK(alg.anti_automorphisms.size() == 6);
  CHECK(alg.union_group.order() == 12);
  CHECK(has_check(alg.report, "disjoint", true));
  CHECK(has_check(alg.report, "index-two", true));
  CHECK(has_check(alg.report, "automorphisms-normal-in-union", true));
}

TEST_CASE("abelian groups have the same automorphisms in both senses") {
  for (const auto& g : {builtin::cyclic(4), builtin::cyclic(6), builtin::klein()}) {
    auto alg = automorphism_algebra(g);
    CHECK(alg.report.pass());
    CHECK(has_check(alg.report, "abelian-sets-coincide", true));
  }
  for (const auto& g : {builtin::d4(), builtin::q8()}) {
    auto alg = automorphism_algebra(g);
    CHECK(alg.report.pass());
    CHECK(alg.union_group.order() == 2 * static_cast<int>(alg.automorphisms.size()));
  }
}

TEST_CASE("abelian collapse over all small group pairs") {
  auto gs = builtin::groups();
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a.order() > 6 || b.order() > 6) continue;
      INFO(a.name() << " -> " << b.name());
      CHECK(verify_abelian_collapse_all(a, b).pass());
    }
  auto inv = make_morphism(builtin::s3(), builtin::s3(), {0, 1, 2, 4, 3, 5}, Variance::anti);
  auto r = verify_abelian_collapse(inv);
  CHECK(r.pass());
  CHECK(has_check(r, "injective:hom-iff-source-abelian", true));
}

TEST_CASE("anti ring maps transport subrings and swap one-sided ideals") {
  auto t2 = builtin::t2_ring();
  for (const auto& phi : enumerate_antihoms(t2, t2)) CHECK(verify_subring_and_transport(phi).pass());
  CHECK(verify_subring_and_transport(reverse_morphism(builtin::m2_ring())).pass());
  CHECK(kind_of([&] { verify_subring_and_transport(identity_morphism(t2)); }) == ErrorKind::PreconditionFailed);
  auto left = ideal_closure(t2, {1}, Side::left);
  auto rev = reverse_morphism(t2);
  std::vector<int> moved;
  for (int x : left.members) moved.push_back(rev(x));
  std::sort(moved.begin(), moved.end());
  CHECK(is_ideal(t2, moved, Side::right));
  CHECK_FALSE(is_ideal(t2, moved, Side::left));
}

namespace {

// Closure of all additive (anti-)multiplicative maps under a pointwise op,
// using only oracle scans.
bool oracle_closed(const FiniteRing& a, const FiniteRing& b, bool anti, bool sum) {
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

}  // namespace

TEST_CASE("pointwise ring audit agrees with an independent closure scan") {
  std::vector<FiniteRing> rs{builtin::zn_ring(2), builtin::zn_ring(4), builtin::f4_ring(), builtin::klein_ring(),
                             builtin::t2_ring()};
  for (const auto& a : rs)
    for (const auto& b : rs) {
      if (a.order() == 8 && b.order() == 8) continue;
      INFO(a.name() << " -> " << b.name());
      auto r = pointwise_ring_audit(a, b);
      for (bool anti : {false, true})
        for (bool sum : {true, false}) {
          std::string name = std::string(anti ? "an" : "hom") + "-closed-under-" + (sum ? "sum" : "product");
          CHECK(has_check(r, name, oracle_closed(a, b, anti, sum)));
        }
    }
  CHECK(pointwise_ring_audit(builtin::zn_ring(2), builtin::zn_ring(2)).pass());
  auto t2 = pointwise_ring_audit(builtin::t2_ring(), builtin::t2_ring());
  CHECK_FALSE(t2.pass());
  CHECK_FALSE(t2.first_failure().empty());
}

TEST_CASE("natural map into An(R, R/I) respects pointwise operations") {
  auto z4 = builtin::zn_ring(4);
  CHECK(natural_an_map(z4, ideal_closure(z4, {2})).pass());
  auto t2 = builtin::t2_ring();
  auto r = natural_an_map(t2, ideal_closure(t2, {2}));
  CHECK(has_check(r, "images-are-anti", true));
}

TEST_CASE("the fields F4 and F9 satisfy the field axioms") {
  for (int p : {2, 3}) {
    FieldFq2 f(p);
    for (int x = 0; x < f.size(); ++x) {
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.frobenius(f.frobenius(x)) == x);
      for (int y = 0; y < f.size(); ++y) {
        CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
      }
    }
  }
  CHECK(kind_of([] { FieldFq2 f(5); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("property: random semilinear maps obey the twist law and factor") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3}) {
    FieldFq2 f(p);
    for (int k = 0; k < 40; ++k) {
      int rows = 1 + static_cast<int>(rng() % 3), cols = 1 + static_cast<int>(rng() % 3);
      Variance t = k % 2 ? Variance::anti : Variance::straight;
      SemilinearMap m{random_matrix(f, rows, cols, rng), t};
      INFO(render(f, m));
      CHECK(verify_semilinear_basics(f, m).pass());
      CHECK(verify_generalized_anti_hom(f, m).pass());
      // pointwise: m(a v) = a^(p^t) m(v)
      for (const auto& v : all_vectors(f, cols))
        for (int a = 0; a < f.size(); ++a) {
          std::vector<int> av = v;
          for (auto& x : av) x = f.mul(a, x);
          auto lhs = apply(f, m, av);
          auto rhs = apply(f, m, v);
          int s = t == Variance::anti ? f.frobenius(a) : a;
          for (auto& x : rhs) x = f.mul(s, x);
          CHECK(lhs == rhs);
        }
      SemilinearMap h{random_matrix(f, cols, rows, rng), Variance::anti};
      CHECK(verify_twist_law(f, m, h).pass());
      auto ker = kernel_basis(f, m);
      if (!ker.empty()) {
        SemilinearMap mu{Matrix::from_columns(cols, ker), Variance::straight};
        CHECK(verify_generalized_anti_factorization(f, m, mu).pass());
      }
    }
  }
}

TEST_CASE("semilinear second isomorphism, mono/epi and bifunctor checks") {
  FieldFq2 f(2);
  std::vector<std::vector<int>> b{{1, 0, 0}, {0, 1, 0}}, c{{1, 0, 0}};
  CHECK(verify_generalized_second_iso(f, 3, b, c).pass());
  for (const auto& m : all_maps(f, 2, 2, Variance::anti)) CHECK(verify_anti_mono_epi(f, m).pass());
  CHECK(an_bifunctor_check(f, 1).pass());
  auto r = hom_union_not_group(f);
  CHECK(r.pass());
  CHECK(reverse_map(2).twist == Variance::anti);
}
