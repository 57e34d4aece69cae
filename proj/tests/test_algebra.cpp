#include <functional>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "antihom/builtin.hpp"
#include "antihom/enumerate.hpp"
#include "antihom/laws.hpp"
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

}  // namespace

TEST_CASE("group validation reports the first broken axiom") {
  CHECK(kind_of([] { validate_group({{0, 1}, {1}}); }) == ErrorKind::NotSquare);
  CHECK(kind_of([] { validate_group({{0, 2}, {1, 0}}); }) == ErrorKind::NotClosed);
  CHECK(kind_of([] { validate_group({{1, 0}, {0, 0}}); }) == ErrorKind::NoIdentity);
  // identity 0, but 1*1 = 1 leaves 1 without an inverse
  CHECK(kind_of([] { validate_group({{0, 1}, {1, 1}}); }) == ErrorKind::MissingInverse);
  // a loop of order 5 with identity that is not associative
  std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { validate_group(loop); }) == ErrorKind::NotAssociative);
}

TEST_CASE("S3 validates with the expected structure") {
  auto g = builtin::s3();
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  CHECK_FALSE(is_abelian(g));
  auto a3 = subgroup_closure(g, {3});
  CHECK(a3.members == std::vector<int>{0, 3, 4});
  CHECK(is_normal(g, a3));
  auto c2 = subgroup_closure(g, {1});
  CHECK_FALSE(is_normal(g, c2));
  CHECK(kind_of([&] { quotient(g, c2); }) == ErrorKind::NotNormal);
  auto q = quotient(g, a3);
  CHECK(q.group.order() == 2);
}

TEST_CASE("every corpus group has exponent dividing its order") {
  for (const auto& g : builtin::groups()) {
    INFO(g.name());
    CHECK(g.order() % exponent(g) == 0);
    for (int x = 0; x < g.order(); ++x) CHECK(g.mul(x, g.inv(x)) == g.identity());
  }
}

TEST_CASE("ring validation and involutions") {
  CHECK(kind_of([] { validate_ring({{0, 1}, {1, 0}}, {{0, 0}}); }) == ErrorKind::NotSquare);
  CHECK(kind_of([] { validate_ring({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}); }) == ErrorKind::AddNotAbelianGroup);
  CHECK(kind_of([] { validate_ring({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}); }) == ErrorKind::MulNotMonoid);
  // multiplication x*y = y is associative with no two-sided unit
  CHECK(kind_of([] { validate_ring({{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}); }) == ErrorKind::MulNotMonoid);
  CHECK(kind_of([] { validate_ring({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, std::vector<int>{1, 0}); }) ==
        ErrorKind::BadInvolution);

  auto t2 = builtin::t2_ring();
  CHECK(t2.order() == 8);
  CHECK_FALSE(is_commutative(t2));
  auto m2 = builtin::m2_ring();
  CHECK(reverse_morphism(m2).images == m2.involution_table());
  auto bare = validate_ring(builtin::zn_ring(4).add_rows(), builtin::zn_ring(4).mul_rows());
  CHECK(kind_of([&] { reverse_morphism(bare); }) == ErrorKind::NoInvolution);
}

TEST_CASE("ideals and quotient rings") {
  auto z4 = builtin::zn_ring(4);
  auto i = ideal_closure(z4, {2});
  CHECK(i.members == std::vector<int>{0, 2});
  auto q = quotient_ring(z4, i);
  CHECK(q.ring.order() == 2);
  CHECK(kind_of([&] { make_ideal(z4, {0, 1}); }) == ErrorKind::NotIdeal);

  auto t2 = builtin::t2_ring();
  // the strictly upper part is two-sided; the left ideal generated by e11 is not right-closed
  CHECK(is_ideal(t2, ideal_closure(t2, {2}).members, Side::two_sided));
  auto left = ideal_closure(t2, {1}, Side::left);
  CHECK(is_ideal(t2, left.members, Side::left));
  CHECK_FALSE(is_ideal(t2, left.members, Side::right));
}

TEST_CASE("make_morphism rejects tables that break the declared law") {
  auto s3 = builtin::s3();
  auto z2 = builtin::cyclic(2);
  CHECK(kind_of([&] { make_morphism(s3, z2, {0, 1, 0, 0, 0, 0}, Variance::straight); }) == ErrorKind::LawViolation);
  CHECK(kind_of([&] { make_morphism(s3, s3, {0, 1, 2, 3, 4, 5}, Variance::anti); }) == ErrorKind::LawViolation);
  CHECK(kind_of([&] { make_morphism(s3, s3, {0, 1, 2, 3, 4}, Variance::straight); }) == ErrorKind::LawViolation);
  auto inv = make_morphism(s3, s3, {0, 1, 2, 4, 3, 5}, Variance::anti);
  CHECK(classify(inv) == Classification::AntiOnly);
  CHECK(classify(builtin::s3_sign()) == Classification::Both);
}

TEST_CASE("Hom and An counts agree with a full scan of the map space") {
  auto gs = builtin::groups();
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a.order() > 6 || b.order() > 6) continue;
      INFO(a.name() << " -> " << b.name());
      auto o = oracle::group_counts(a, b);
      CHECK(static_cast<long>(enumerate_homs(a, b).size()) == o.straight);
      CHECK(static_cast<long>(enumerate_antihoms(a, b).size()) == o.anti);
      CHECK(o.straight == o.anti);
    }
}

TEST_CASE("ring map counts agree with a full scan") {
  std::vector<FiniteRing> rs{builtin::zn_ring(2), builtin::zn_ring(4), builtin::f4_ring(), builtin::klein_ring()};
  for (const auto& a : rs)
    for (const auto& b : rs) {
      INFO(a.name() << " -> " << b.name());
      auto o = oracle::ring_counts(a, b);
      CHECK(static_cast<long>(enumerate_homs(a, b).size()) == o.straight);
      CHECK(static_cast<long>(enumerate_antihoms(a, b).size()) == o.anti);
    }
  auto t2 = builtin::t2_ring();
  auto o = oracle::ring_counts(t2, t2);
  CHECK(static_cast<long>(enumerate_homs(t2, t2).size()) == o.straight);
  CHECK(static_cast<long>(enumerate_antihoms(t2, t2).size()) == o.anti);
  CHECK(o.straight == o.anti);
}

TEST_CASE("End(S3) has ten straight and ten anti maps") {
  auto s3 = builtin::s3();
  auto o = oracle::group_counts(s3, s3);
  CHECK(o.straight == 10);
  CHECK(o.anti == 10);
  CHECK(enumerate_homs(s3, s3).size() == 10);
  CHECK(enumerate_antihoms(s3, s3).size() == 10);
}

TEST_CASE("enumeration refuses work beyond the bound") {
  auto s3 = builtin::s3();
  CHECK(kind_of([&] { enumerate_homs(s3, s3, 5); }) == ErrorKind::BoundExceeded);
  CHECK_NOTHROW(enumerate_homs(s3, s3, 36));
}

TEST_CASE("composition tags follow the XOR law on every composable pair") {
  auto r = verify_variance_table(builtin::groups());
  CHECK(r.pass());
  auto rings = verify_variance_table(std::vector<FiniteRing>{builtin::zn_ring(2), builtin::zn_ring(4), builtin::t2_ring()});
  CHECK(rings.pass());
}

TEST_CASE("property: straight and anti laws swap under the opposite target") {
  // f is anti into B exactly when it is straight into B^op
  auto t2 = builtin::t2_ring();
  auto op = opposite(t2);
  for (const auto& f : enumerate_antihoms(builtin::zn_ring(2), t2))
    CHECK_FALSE(law_violation(builtin::zn_ring(2), op, f.images, Variance::straight));
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick(0, 5);
  auto s3 = builtin::s3();
  for (int k = 0; k < 200; ++k) {
    std::vector<int> img(6);
    for (auto& x : img) x = pick(rng);
    bool straight = oracle::group_straight(s3, s3, img);
    bool anti = oracle::group_anti(s3, s3, img);
    CHECK(satisfies(classify(img, s3, s3), Variance::straight) == straight);
    CHECK(satisfies(classify(img, s3, s3), Variance::anti) == anti);
  }
}

TEST_CASE("f -> f after inversion is a bijection from Hom onto An") {
  for (const auto& a : builtin::groups())
    for (const auto& b : builtin::groups()) {
      INFO(a.name() << " -> " << b.name());
      CHECK(verify_correspondence(a, b).pass());
    }
  for (const auto& a : builtin::rings())
    for (const auto& b : builtin::rings()) {
      if (a.order() * b.order() > 64) continue;
      INFO(a.name() << " -> " << b.name());
      CHECK(verify_correspondence(a, b).pass());
    }
}

TEST_CASE("star composition makes An(S3,S3) a monoid with unit the inversion") {
  auto r = verify_star_monoid(builtin::s3());
  CHECK(r.pass());
  CHECK(r.notes.back() == "1000 triples");
  for (const auto& g : builtin::groups()) CHECK(verify_star_monoid(g).pass());
}

TEST_CASE("straight maps rebuild from their anti partners and factor classes partition") {
  for (const auto& a : builtin::groups())
    for (const auto& b : builtin::groups()) {
      INFO(a.name() << " -> " << b.name());
      CHECK(verify_factorization_law(a, b).pass());
    }
  CHECK(verify_factorization_law(builtin::t2_ring(), builtin::t2_ring()).pass());
}
