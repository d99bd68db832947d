#include <doctest.h>

#include <filesystem>

#include "lieyb/catalog.hpp"
#include "lieyb/errors.hpp"
#include "lieyb/io.hpp"
#include "lieyb/verify.hpp"

using namespace lieyb;
namespace fs = std::filesystem;

TEST_CASE("scalar json") {
  CHECK(scalar_to_json(Scalar(-3, 2)) == json("-3/2"));
  CHECK(scalar_from_json(json(4)) == Scalar(4));
  CHECK(scalar_from_json(json("6/4")) == Scalar(3, 2));
  CHECK_THROWS_AS(scalar_from_json(json(1.5)), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json("1/0")), ParseError);
}

TEST_CASE("algebra json round trip") {
  const OscillatorAlgebra g = build_oscillator({1, 3});
  const LieAlgebra back = algebra_from_json(algebra_to_json(g.algebra));
  CHECK(back.constants() == g.algebra.constants());
  CHECK(back.labels() == g.algebra.labels());
  const AlgebraInput in = algebra_input_from_json(parse_json_text(R"({"oscillator": {"lambda": ["1", "3"]}})"));
  REQUIRE(in.oscillator.has_value());
  CHECK(in.algebra.constants() == g.algebra.constants());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  CHECK_THROWS_AS(document_from_json(parse_json_text(R"({"algebra": {"dim": 2}, "extra": 1})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(parse_json_text(R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": ["1", "0"]}]})")),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json(parse_json_text(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": ["1"]}]})")),
                  Error);
  const json jac = parse_json_text(
      R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": ["0","0","1"]}, {"i": 0, "j": 2, "coeffs": ["1","0","0"]}]})");
  CHECK_THROWS_AS(algebra_from_json(jac), JacobiViolation);
  CHECK_THROWS_AS(bivector_from_json(parse_json_text(R"({"entries": [{"i": 0, "j": 5, "value": "1"}]})"), 3), Error);
  CHECK_THROWS_AS(document_from_json(parse_json_text(R"({"algebra": {"dim": 1}, "form": "k_lambda"})")), ParseError);
}

TEST_CASE("document round trip") {
  SpecDocument d;
  const OscillatorAlgebra g = build_oscillator({1, 2});
  d.algebra = AlgebraInput{g.algebra, g};
  d.bivector = t_bivector(g, 1);
  d.cocycle = coboundary(g.algebra, t_bivector(g, 2));
  d.form = FormInput{true, {}};
  d.params = BialgebraParams{t_bivector(g, 1), Vector(6), {1, 2}};
  const std::string text = canonical_dump(document_to_json(d));
  const SpecDocument back = document_from_json(parse_json_text(text));
  CHECK(back.bivector == d.bivector);
  CHECK(back.cocycle == d.cocycle);
  CHECK(back.params == d.params);
  CHECK(canonical_dump(document_to_json(back)) == text);
}

TEST_CASE("repository data files are canonical") {
  const fs::path root = fs::path(default_golden_dir()).parent_path();
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(root / "specs")) {
    const json j = read_json_file(entry.path().string());
    const std::string bytes = canonical_dump(j);
    CHECK_MESSAGE(canonical_dump(document_to_json(document_from_json(j))) == bytes, entry.path().string());
    ++n;
  }
  CHECK(n >= 5);
  for (const GoldenCase& c : golden_cases()) {
    const json j = read_json_file((root / "golden" / c.file).string());
    CHECK_MESSAGE(j == golden_to_json(c), c.file);
  }
}
