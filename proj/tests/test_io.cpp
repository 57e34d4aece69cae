#include <functional>

#include <catch2/catch_amalgamated.hpp>

#include "antihom/antihom.hpp"

using namespace antihom;

namespace {

AlgebraError error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e;
  }
  FAIL("no error raised");
  return AlgebraError(ErrorKind::ValidationError, "");
}

RunConfig config(const std::string& command, std::vector<std::string> ids = {}) {
  RunConfig cfg;
  cfg.command = command;
  cfg.theorems = std::move(ids);
  cfg.format = "records";
  return cfg;
}

// Same objects, arrow names, endpoints, composites and sums, compared by
// name; the writer lists arrows grouped by hom-set.
bool same_by_name(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.label != b.label || a.objects != b.objects || a.size() != b.size()) return false;
  auto to_b = [&](int x) { return *b.find_arrow(a.name(x)); };
  for (int x = 0; x < a.size(); ++x) {
    if (!b.find_arrow(a.name(x))) return false;
    if (a.src(x) != b.src(to_b(x)) || a.dst(x) != b.dst(to_b(x))) return false;
  }
  for (int o = 0; o < a.object_count(); ++o)
    if (to_b(a.id(o)) != b.id(o)) return false;
  for (int g = 0; g < a.size(); ++g)
    for (int f = 0; f < a.size(); ++f) {
      int h = a.composite_or_none(g, f);
      if (h >= 0 && b.compose(to_b(g), to_b(f)) != to_b(h)) return false;
      if (a.summable(g, f) && (!b.summable(to_b(g), to_b(f)) || b.add(to_b(g), to_b(f)) != to_b(a.add(g, f))))
        return false;
    }
  return a.preadditive() == b.preadditive();
}

}  // namespace

TEST_CASE("group files round trip with their subgroups") {
  for (const auto& g : builtin::groups()) {
    INFO(g.name());
    auto text = write_group(g, {{"H", {0}}});
    auto parsed = parse_group(text);
    CHECK(parsed.group == g);
    CHECK(parsed.group.name() == g.name());
    REQUIRE(parsed.subgroup("H").has_value());
    CHECK(parsed.subgroup("H")->members == std::vector<int>{0});
    CHECK(write_group(parsed.group, {{"H", {0}}}) == text);
  }
}

TEST_CASE("ring files round trip with involution and ideals") {
  for (const auto& r : builtin::rings()) {
    INFO(r.name());
    auto parsed = parse_ring(write_ring(r, {{"Z", {0}}}));
    CHECK(parsed.ring == r);
    CHECK(parsed.ring.involution_table() == r.involution_table());
    CHECK(parsed.ideal("Z").has_value());
  }
  auto bare = validate_ring(builtin::zn_ring(4).add_rows(), builtin::zn_ring(4).mul_rows(), std::nullopt, "Z4bare");
  auto parsed = parse_ring(write_ring(bare));
  CHECK_FALSE(parsed.ring.has_involution());
}

TEST_CASE("map, semilinear and category files round trip") {
  MapSpec m{"sign", "S3", "Z2", Variance::anti, {0, 1, 1, 0, 0, 1}};
  CHECK(parse_map(write_map(m)) == m);

  FieldFq2 f4(2), f9(3);
  SemilinearMap s{Matrix(2, 3), Variance::anti};
  s.matrix.at(0, 1) = 2;
  s.matrix.at(1, 2) = 3;
  CHECK(parse_semilinear(write_semilinear("s", f4, s)).map == s);
  SemilinearMap t{Matrix::identity(2), Variance::straight};
  t.matrix.at(0, 1) = 7;
  auto nine = parse_semilinear(write_semilinear("t", f9, t));
  CHECK(nine.p == 3);
  CHECK(nine.map == t);

  for (const auto& c : builtin::categories()) {
    INFO(c.label);
    auto parsed = parse_category(write_category(c));
    CHECK(parsed.category == c);
    CHECK_FALSE(parsed.factorization.has_value());
    auto fparsed = parse_category(write_factorization(caf(c)));
    REQUIRE(fparsed.factorization.has_value());
    CHECK(tag_renaming(*fparsed.factorization, caf(c)).has_value());
  }
  for (const auto& c : builtin::preadditive_categories()) {
    INFO(c.label);
    auto parsed = parse_category(write_category(c)).category;
    CHECK(same_by_name(parsed, c));
    auto text = write_category(parsed);
    CHECK(write_category(parse_category(text).category) == text);
  }
}

TEST_CASE("parse errors carry the source and line") {
  auto truncated = error_of([] { parse_group("group G order 2\n0 1\n", "g.grp"); });
  CHECK(truncated.kind() == ErrorKind::ParseError);

  auto short_row = error_of([] { parse_group("group G order 3\n0 1 2\n1 2 0\n2 0\n", "g.grp"); });
  CHECK(short_row.kind() == ErrorKind::ParseError);
  CHECK(std::string(short_row.what()).find("g.grp:4:") != std::string::npos);

  auto no_mul = error_of([] { parse_ring("ring R order 2\nadd:\n0 1\n1 0\n", "r.rng"); });
  CHECK(no_mul.kind() == ErrorKind::ParseError);

  auto word = error_of([] { parse_group("group G order 1\nx\n", "g.grp"); });
  CHECK(word.kind() == ErrorKind::ParseError);
  CHECK(std::string(word.what()).find("g.grp:2:") != std::string::npos);

  auto unknown = error_of([] { parse_structure_text("widget W\n", "w.txt"); });
  CHECK(unknown.kind() == ErrorKind::ParseError);

  auto missing = error_of([] { parse_structure("/nonexistent/file.grp"); });
  CHECK(missing.kind() == ErrorKind::ParseError);

  auto invalid = error_of([] { parse_group("group G order 2\n0 1\n1 1\n", "g.grp"); });
  CHECK(invalid.kind() == ErrorKind::ValidationError);
  CHECK(std::string(invalid.what()).find("g.grp") != std::string::npos);

  // comments and blank lines are ignored
  auto ok = parse_group("# two elements\ngroup G order 2\n\n0 1  # row 0\n1 0\n", "g.grp");
  CHECK(ok.group.order() == 2);
}

TEST_CASE("built-in corpus is the parse of the bundled files") {
  auto c = builtin_corpus();
  CHECK(c.failures.empty());
  CHECK(c.groups.size() == 8);
  CHECK(c.rings.size() == 6);
  CHECK(c.group("S3") != nullptr);
  CHECK(c.group("S3")->subgroup("A3").has_value());
  CHECK(c.ring("T2F2") != nullptr);
  CHECK(c.map("signstar") != nullptr);
  for (const auto& [name, text] : corpus_files()) {
    INFO(name);
    CHECK_NOTHROW(parse_structure_text(text, name));
  }
}

TEST_CASE("loading collects failures without throwing") {
  auto c = load_corpus({"/nonexistent/x.grp"});
  REQUIRE(c.failures.size() == 1);
  CHECK(c.failures[0].error.kind() == ErrorKind::ParseError);
}

TEST_CASE("records round trip and are deterministic") {
  auto cfg = config("verify", {"anti-factorization", "star-monoid"});
  auto b = run(cfg);
  CHECK(b.pass());
  CHECK(b.records.size() > 4);
  auto text = emit_records(b);
  CHECK(parse_records(text) == b);
  CHECK(emit_records(run(cfg)) == text);

  auto tampered = text;
  auto at = tampered.find("\"passed\":");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 10, "\"passed\":9");
  CHECK(error_of([&] { parse_records(tampered); }).kind() == ErrorKind::ParseError);
  CHECK(error_of([] { parse_records("not json\n"); }).kind() == ErrorKind::ParseError);
}

TEST_CASE("text output summarises the same records") {
  auto cfg = config("verify", {"anti-factorization"});
  cfg.format = "text";
  auto b = run(cfg);
  auto text = emit(b);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find(std::to_string(b.records.size())) != std::string::npos);
}

TEST_CASE("run handles empty selections, bounds and bad names") {
  auto empty = run(config("verify"));
  CHECK(empty.records.empty());
  CHECK(empty.pass());

  auto tight = config("verify", {"star-monoid"});
  tight.bound = 5;
  auto b = run(tight);
  CHECK_FALSE(b.pass());
  bool bound_record = false;
  for (const auto& r : b.records) bound_record |= r.check == "BoundExceeded";
  CHECK(bound_record);

  auto wrong = config("frobnicate");
  CHECK_FALSE(run(wrong).pass());

  auto named = config("verify", {"anti-factorization"});
  named.params["group"] = "S3";
  named.params["normal"] = "NoSuchSubgroup";
  CHECK_FALSE(run(named).pass());
}

TEST_CASE("enumeration commands count maps between named structures") {
  auto cfg = config("enum-homs");
  cfg.params["from"] = "S3";
  cfg.params["to"] = "S3";
  auto b = run(cfg);
  REQUIRE(b.records.size() == 1);
  CHECK(b.records[0].detail == "10");
  cfg.command = "enum-antihoms";
  CHECK(run(cfg).records[0].detail == "10");
}
