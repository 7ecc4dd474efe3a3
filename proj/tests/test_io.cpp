#include <doctest.h>

#include "semimon/error.hpp"
#include "semimon/io.hpp"
#include "semimon/report.hpp"

using namespace semimon;

namespace {

const std::string data_dir = SEMIMON_DATA_DIR;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolated;
}

const char* square_model = R"(model 3
0 0 1
1 0 1
0 1 1
1 1 1
)";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("input detection") {
    CHECK(detect_input("# comment\nmonoid 1\n2\n3\n") == InputKind::Monoid);
    CHECK(detect_input(square_model) == InputKind::Model);
    CHECK(detect_input("1 2\n2 3\n") == InputKind::Complex);
    CHECK_THROWS_AS(detect_input("  # nothing\n"), Error);
  }

  TEST_CASE("monoids") {
    const AffineMonoid m = parse_monoid("monoid 1\n2\n3\n");
    CHECK(m.generators().size() == 2);
    CHECK(parse_monoid(write_monoid(m)).generators() == m.generators());
    CHECK(kind_of([] { parse_monoid("monoid 2\n1 0\n0\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_monoid("monoid 1\nx\n"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("model defaults and round trips") {
    const DecoratedCone sq = parse_model(square_model);
    for (const auto& f : sq.faces().faces()) CHECK(sq.lambda(f.id) == f.span);
    CHECK(sq.degree_form() == grading_form(sq.cone()));
    for (const auto& name : builtin_names()) {
      const DecoratedCone w = builtin(name);
      const DecoratedCone back = parse_model(write_model(w));
      CHECK(back.lambdas() == w.lambdas());
      CHECK(back.degree_form() == w.degree_form());
      CHECK(parse_model(read_text_file(data_dir + "/" + name + ".model")).lambdas() == w.lambdas());
    }
  }

  TEST_CASE("model errors") {
    // Ray 4 is not extreme.
    CHECK(kind_of([] { parse_model("model 2\n1 0\n0 1\n1 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_model("model 2\n1 0\n0 1\nface 0 1\n1 0\n0 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_model("model 2\n1 0\n0 1\nlattice\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_model("model 2\n1 0\n0 1\nface 1 0\n0 1\n"); }) == ErrorKind::ParseError);
    // A ray lattice larger than its facet's: not monotone.
    CHECK(kind_of([] {
            parse_model("model 3\n0 0 1\n1 0 1\n0 1 1\n1 1 1\nface 0 1\n2 0 0\n0 0 2\nface 0\n0 0 1\n");
          }) == ErrorKind::ParseError);
    // Wrong rank.
    CHECK(kind_of([] { parse_model("model 2\n1 0\n0 1\nface 0\n"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("complexes") {
    const auto d = parse_complex("1 2\n2 3 # edge\n");
    CHECK(d.vertex_count() == 3);
    CHECK(d.facets().size() == 2);
    CHECK_THROWS_AS(parse_complex("# none\n"), Error);
  }

  TEST_CASE("field and point arguments") {
    CHECK(parse_fields("q,2,3") ==
          std::vector<Field>{Field::rationals(), Field::prime(2), Field::prime(3)});
    CHECK(parse_fields("5,Q") == std::vector<Field>{Field::rationals(), Field::prime(5)});
    CHECK_THROWS_AS(parse_fields("4"), Error);
    CHECK_THROWS_AS(parse_fields(""), Error);
    CHECK(parse_point("0,0,-1,+3") == make_vector({0, 0, -1, 3}));
    CHECK_THROWS_AS(parse_point("1,a"), Error);
  }
}

TEST_SUITE("report") {
  TEST_CASE("analysis of <2,3>") {
    const Json r = analyze_monoid(parse_monoid("monoid 1\n2\n3\n"), {});
    CHECK(r["seminormal"]["value"] == false);
    CHECK(r["seminormal"]["method"] == "exact");
    CHECK(r["seminormal"]["witness"] == Json::array({1}));
    CHECK(r["normal"]["value"] == false);
    CHECK(r["normal"]["witness"] == Json::array({1}));
  }

  TEST_CASE("analysis of the orthant") {
    const Json r = analyze_monoid(parse_monoid("monoid 2\n1 0\n0 1\n"), {});
    CHECK(r["normal"]["value"] == true);
    CHECK(r["seminormal"]["method"] == "bounded(3)");
    const Json& w = r["seminormalization"];
    CHECK(w["cohen_macaulay"]["Q"]["value"] == true);
    CHECK(w["gorenstein"]["Q"]["value"] == true);
    CHECK(w["gorenstein"]["Q"]["witness"] == Json::array({1, 1}));
    CHECK(w["f_bad_primes"]["value"].empty());
  }

  TEST_CASE("analysis of the pyramid and determinism") {
    AnalysisOptions opts;
    const Json a = analyze_model(builtin("pyramid-7.1"), opts);
    CHECK(a["s2"]["value"] == true);
    CHECK(a["depth"]["Q"]["value"] == 3);
    CHECK(a["cohen_macaulay"]["F2"]["value"] == false);
    CHECK(a["f_bad_primes"]["value"] == Json::array({2}));
    CHECK(a["depth_bounds"]["Q"]["chain_holds"] == true);
    CHECK(a.dump() == analyze_model(builtin("pyramid-7.1"), opts).dump());
  }

  TEST_CASE("cohomology report") {
    const std::vector<Field> fields{Field::rationals(), Field::prime(2)};
    const Json r = cohomology_report(builtin("pyramid-7.1"), make_vector({0, 0, 1, 1}), fields);
    CHECK(r["dims"]["Q"] == Json::array({0, 0, 0, 1, 0}));
    CHECK(r["filter"].size() == 3);
    CHECK(r["base_face"] == Json::array({0}));
    const Json zero = cohomology_report(builtin("pyramid-7.1"), make_vector({0, 0, 0, 0}), fields);
    CHECK(zero["dims"]["F2"] == Json::array({0, 0, 0, 0, 0}));
  }

  TEST_CASE("invariant suite passes on shipped examples") {
    for (const auto& name : builtin_names()) CHECK(check_model(builtin(name), {}).passed);
    const AffineMonoid m = parse_monoid(read_text_file(data_dir + "/pyramid-7.1.monoid"));
    const CheckOutcome c = check_monoid(m, {});
    CHECK(c.passed);
  }
}
