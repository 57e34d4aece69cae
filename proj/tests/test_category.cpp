#include <functional>

#include <catch2/catch_amalgamated.hpp>

#include "antihom/builtin.hpp"
#include "antihom/category.hpp"
#include "antihom/functor.hpp"
#include "antihom/products.hpp"
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

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.what();
  }
  return "";
}

bool has_check(const TheoremReport& r, const std::string& name, bool pass) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass == pass;
  return false;
}

// One object, arrows e, s, r, t composing as exponents of a generator of
// order 4: r and t are anti, r is the reverse morphism.
FactorizationCategory twisted_bz2() {
  const std::vector<int> power{0, 2, 1, 3};
  const std::vector<int> arrow_of{0, 2, 1, 3};
  FactorizationCategory fc;
  fc.total = make_category({"*"}, {{"e", 0, 0}, {"s", 0, 0}, {"r", 0, 0}, {"t", 0, 0}}, {0}, [&](int g, int f) {
    return arrow_of[static_cast<std::size_t>((power[static_cast<std::size_t>(g)] + power[static_cast<std::size_t>(f)]) % 4)];
  });
  fc.total.label = "BZ2twisted";
  fc.variance = {Variance::straight, Variance::straight, Variance::anti, Variance::anti};
  fc.reverse = {2};
  return fc;
}

std::vector<FiniteCategory> plain() {
  auto cs = builtin::categories();
  for (auto& c : builtin::preadditive_categories()) cs.push_back(c);
  return cs;
}

}  // namespace

TEST_CASE("category validation rejects malformed tables") {
  auto c = builtin::chain3();
  CHECK_NOTHROW(validate_category(c));

  auto bad_id = c;
  bad_id.identities[0] = 1;
  CHECK(kind_of([&] { validate_category(bad_id); }) == ErrorKind::BadIdentity);

  auto open = c;
  open.comp[static_cast<std::size_t>(c.size() + 0)] = -1;
  CHECK(kind_of([&] { validate_category(open); }) == ErrorKind::NotClosed);

  auto dup = c;
  dup.arrows[1].name = dup.arrows[0].name;
  CHECK(kind_of([&] { validate_category(dup); }) == ErrorKind::ValidationError);
}

TEST_CASE("canonical structure round trips") {
  for (const auto& c : plain()) {
    INFO(c.label);
    auto fc = caf(c);
    CHECK_NOTHROW(validate_factorization(fc));
    CHECK(fca(fc) == c);
    auto again = caf(fca(fc));
    CHECK(again == fc);
    CHECK(anti_category(fc).size() == c.size());
    CHECK(associated_category(fc).size() == 2 * c.size());
  }
}

TEST_CASE("a straight-tagged composite of mixed variance breaks axiom 2") {
  auto fc = caf(builtin::arrow_category());
  auto fstar = *fc.total.find_arrow("f*");
  fc.variance[static_cast<std::size_t>(fstar)] = Variance::straight;
  CHECK(kind_of([&] { validate_factorization(fc); }) == ErrorKind::AxiomViolation);
  CHECK(message_of([&] { validate_factorization(fc); }).find("axiom 2") != std::string::npos);

  auto tagged_id = caf(builtin::arrow_category());
  tagged_id.variance[0] = Variance::anti;
  CHECK(message_of([&] { validate_factorization(tagged_id); }).find("axiom 1") != std::string::npos);

  auto bad_reverse = caf(builtin::arrow_category());
  bad_reverse.reverse[0] = 0;
  CHECK(message_of([&] { validate_factorization(bad_reverse); }).find("axiom 3") != std::string::npos);
}

TEST_CASE("structure with a reverse morphism of order four") {
  auto fc = twisted_bz2();
  CHECK_NOTHROW(validate_factorization(fc));
  CHECK(fca(fc).size() == 2);
  CHECK_FALSE(tag_renaming(fc, caf(fca(fc))).has_value());

  auto stars = verify_star_laws(fc);
  CHECK(has_check(stars, "reverse-is-star-unit", false));
  CHECK(kind_of([&] { anti_category(fc); }) == ErrorKind::AxiomViolation);

  auto law = verify_law_of_factorization(fc);
  CHECK(has_check(law, "factors-through-reverse", true));
  CHECK(has_check(law, "straight-equals-star-after-reverse", false));

  auto cmp = canonical_comparison(fc);
  CHECK(functor_violation(cmp, fc.total, caf(fca(fc)).total).has_value());
}

TEST_CASE("star laws, iso correspondence and factorization law on canonical structures") {
  for (const auto& c : plain()) {
    INFO(c.label);
    auto fc = caf(c);
    CHECK(verify_star_laws(fc).pass());
    CHECK(verify_iso_correspondence(fc).pass());
    CHECK(verify_law_of_factorization(fc).pass());
  }
}

TEST_CASE("generator construction agrees with the canonical structure") {
  for (const auto& c : plain()) {
    INFO(c.label);
    std::vector<int> dictionary(static_cast<std::size_t>(c.size()));
    for (int x = 0; x < c.size(); ++x) dictionary[static_cast<std::size_t>(x)] = x;
    auto d = c;
    for (auto& a : d.arrows) a.name += "'";
    auto merged = merge_generator(c, d, dictionary);
    CHECK_NOTHROW(validate_factorization(merged));
    CHECK(tag_renaming(merged, caf(c)).has_value());
  }
  auto c = builtin::chain3();
  CHECK(kind_of([&] { merge_generator(c, builtin::meet_semilattice(), std::vector<int>(6, 0)); }) ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("functor enumeration matches a scan of all object and arrow maps") {
  auto cs = builtin::categories();
  for (const auto& c : cs)
    for (const auto& d : cs) {
      INFO(c.label << " -> " << d.label);
      CHECK(static_cast<long>(enumerate_functors(c, d).size()) == oracle::functor_count(c, d));
    }
  CHECK(enumerate_functors(builtin::arrow_category(), builtin::arrow_category()).size() == 3);
  CHECK(enumerate_functors(builtin::chain3(), builtin::chain3()).size() == 10);
  CHECK(enumerate_functors(builtin::meet_semilattice(), builtin::chain3()).size() == 14);
}

TEST_CASE("factorable functors between canonical structures are lifts") {
  auto cs = builtin::categories();
  for (const auto& c : cs)
    for (const auto& d : cs) {
      INFO(c.label << " -> " << d.label);
      auto fs = enumerate_functors(c, d);
      auto lifted = enumerate_factorable(caf(c), caf(d));
      REQUIRE(lifted.size() == fs.size());
      for (const auto& f : fs) {
        auto up = caf_functor(f, c, d);
        CHECK(check_factorable(up, caf(c), caf(d)).pass());
        CHECK(fca_functor(up, caf(c), caf(d)) == f);
      }
    }
}

TEST_CASE("f to f after reverse is an equivalence onto the anti category") {
  for (const auto& c : plain()) {
    INFO(c.label);
    auto fc = caf(c);
    CHECK(check_equivalence(anti_functor(fc), fca(fc), anti_category(fc)).pass());
  }
}

TEST_CASE("products in thin categories are meets") {
  for (const auto& c : {builtin::chain3(), builtin::meet_semilattice()})
    for (int i = 0; i < c.object_count(); ++i)
      for (int j = 0; j < c.object_count(); ++j) {
        INFO(c.label << " " << i << " " << j);
        auto ps = find_products(c, {i, j});
        int m = oracle::poset_meet(c, i, j);
        if (m < 0) {
          CHECK(ps.empty());
          continue;
        }
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].object == m);
        CHECK(anti_product_uniqueness(caf(c), {i, j}).pass());
      }
  // m is the meet of x and y
  CHECK(find_products(builtin::meet_semilattice(), {1, 2})[0].object == 0);
}

TEST_CASE("an anti product need not survive a factorable functor") {
  auto meet = builtin::meet_semilattice();
  auto chain = builtin::chain3();
  FunctorData collapse;
  for (const auto& f : enumerate_functors(meet, chain))
    if (f.objects == std::vector<int>{0, 1, 1}) collapse = f;
  REQUIRE_FALSE(collapse.objects.empty());
  auto up = caf_functor(collapse, meet, chain);
  auto r = check_antiproduct_preservation(up, caf(meet), caf(chain), {1, 2});
  CHECK(has_check(r, "presentation 0: image-is-product", false));

  FunctorData id = identity_functor(meet);
  auto same = check_antiproduct_preservation(caf_functor(id, meet, meet), caf(meet), caf(meet), {1, 2});
  CHECK(same.pass());
}

TEST_CASE("forgetting and adding anti morphisms are adjoint both ways") {
  CHECK(check_adjunctions(builtin::categories()).pass());
  CHECK(check_adjunctions(builtin::preadditive_categories(), true).pass());
}

TEST_CASE("functor enumeration refuses large categories") {
  auto big = builtin::ring_category(builtin::m2_ring());
  CHECK(kind_of([&] { enumerate_functors(big, big); }) == ErrorKind::BoundExceeded);
}
