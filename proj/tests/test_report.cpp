#include <catch2/catch_amalgamated.hpp>

#include "c0square/report.hpp"

using c0square::InputSpec;
using c0square::parse_input;

namespace {

const char* kQuarticInput = R"({
  "zeros": [
    {"re": 0, "im": 0.3, "multiplicity": 2},
    {"re": 0.7071067811865476, "im": 0, "multiplicity": 1},
    {"re": -0.7071067811865476, "im": 0, "multiplicity": 1}
  ]
})";

}  // namespace

TEST_CASE("parsing a valid input") {
  const InputSpec spec = parse_input(
      R"({"zeros":[{"re":0.5,"im":0,"multiplicity":1},{"re":-0.5,"im":0,"multiplicity":1}]})");
  REQUIRE(spec.degree() == 2);
  REQUIRE(spec.samples == 2048);
  REQUIRE(spec.oracle);
  REQUIRE(spec.seed == 0);
}

TEST_CASE("parse and validation failures") {
  REQUIRE_THROWS_AS(parse_input("{\"zeros\": ["), c0square::parse_error);
  REQUIRE_THROWS_AS(parse_input(R"({"zeros":[{"re":1.2,"im":0,"multiplicity":1}]})"),
                    c0square::validation_error);
  REQUIRE_THROWS_AS(parse_input(R"({"zeros":[{"re":0.5,"im":0}]})"),
                    c0square::validation_error);  // degree 1
  REQUIRE_THROWS_AS(parse_input(R"({"zeros":[{"re":0.5,"im":0}], "zers": 1})"),
                    c0square::validation_error);  // unknown key
  REQUIRE_THROWS_AS(
      parse_input(R"({"zeros":[{"re":0.5,"im":0,"multiplicity":0},{"re":0,"im":0}]})"),
      c0square::validation_error);
  REQUIRE_THROWS_AS(parse_input(R"({"zeros":"nope"})"), c0square::validation_error);
}

TEST_CASE("full report on the canonical quartic") {
  const InputSpec spec = parse_input(kQuarticInput);
  REQUIRE(spec.degree() == 4);
  const nlohmann::json report = c0square::run_report(spec);

  REQUIRE(report["conditions"]["A"].get<bool>());
  REQUIRE(report["conditions"]["B"].get<bool>());
  REQUIRE(report["conditions"]["C"].get<bool>());
  REQUIRE_FALSE(report["verdicts"]["reducible"].get<bool>());
  REQUIRE(report["verdicts"]["reducibility_case"].get<std::string>() == "Irreducible");
  REQUIRE_FALSE(report["verdicts"]["multiplicity_free"].get<bool>());
  REQUIRE_FALSE(report["verdicts"]["lat_equal"].get<bool>());

  REQUIRE(report["oracle"]["irreducible"].get<bool>());
  REQUIRE_FALSE(report["oracle"]["cyclic"].get<bool>());
  REQUIRE(report["oracle"]["commutant_dim"].get<int>() == 6);
  REQUIRE(report["oracle"]["agreement"].get<bool>());
  REQUIRE(c0square::report_agreement(report));

  REQUIRE(report["witnesses"].contains("even_divisor_zeros"));
  REQUIRE(report["witnesses"].contains("lat_witness"));
  REQUIRE_FALSE(report["witnesses"]["lat_witness"]["hyperinvariant"].get<bool>());
  REQUIRE_FALSE(report["witnesses"].contains("projection_pair"));

  REQUIRE(report["residuals"]["theta_inner"].get<double>() < 1e-9);
  REQUIRE(report["residuals"]["det_identity"].get<double>() < 1e-9);
  REQUIRE(report["residuals"]["eig"].get<double>() < 1e-7);
}

TEST_CASE("report on an even pair includes the split") {
  const InputSpec spec = parse_input(
      R"({"zeros":[{"re":0.5,"im":0,"multiplicity":1},{"re":-0.5,"im":0,"multiplicity":1}]})");
  const nlohmann::json report = c0square::run_report(spec);
  REQUIRE(report["verdicts"]["reducibility_case"].get<std::string>() == "Even");
  REQUIRE(report["witnesses"].contains("split_factors"));
  REQUIRE(report["witnesses"]["split_factors"].size() == 2);
  REQUIRE(report["witnesses"].contains("projection_pair"));
  REQUIRE(report["witnesses"]["projection_pair"]["case"].get<std::string>() == "II");
  REQUIRE_FALSE(report["oracle"]["irreducible"].get<bool>());
  REQUIRE(report["oracle"]["agreement"].get<bool>());
}

TEST_CASE("report on a cyclic generic pair") {
  const InputSpec spec = parse_input(
      R"({"zeros":[{"re":0.3,"im":0,"multiplicity":1},{"re":0.4,"im":0,"multiplicity":1}]})");
  const nlohmann::json report = c0square::run_report(spec);
  REQUIRE(report["verdicts"]["multiplicity_free"].get<bool>());
  REQUIRE(report["verdicts"]["lat_equal"].get<bool>());
  REQUIRE(report["oracle"]["cyclic"].get<bool>());
  REQUIRE(report["oracle"]["agreement"].get<bool>());
  REQUIRE_FALSE(report["witnesses"].contains("lat_witness"));
}

TEST_CASE("reports are deterministic for a fixed spec and seed") {
  const InputSpec spec = parse_input(kQuarticInput);
  const std::string first = c0square::run_report(spec).dump();
  const std::string second = c0square::run_report(spec).dump();
  REQUIRE(first == second);
}

TEST_CASE("oracle can be switched off") {
  InputSpec spec = parse_input(kQuarticInput);
  spec.oracle = false;
  const nlohmann::json report = c0square::run_report(spec);
  REQUIRE_FALSE(report.contains("oracle"));
  REQUIRE(c0square::report_agreement(report));
}

TEST_CASE("text rendering carries the five labels") {
  const nlohmann::json report = c0square::run_report(parse_input(kQuarticInput));
  const std::string text = c0square::render_text(report);
  for (const char* label : {"(A)", "(B)", "(C)", "(D)", "(E)", "oracle:"})
    REQUIRE(text.find(label) != std::string::npos);
}

TEST_CASE("random suite agrees with itself") {
  const nlohmann::json summary = c0square::random_suite(2, 4, 10, 7);
  REQUIRE(summary["count"].get<int>() == 10);
  REQUIRE(summary["agreements"].get<int>() == 10);
  REQUIRE(summary["all_agree"].get<bool>());
  REQUIRE(summary["instances"].size() == 10);

  REQUIRE_THROWS_AS(c0square::random_suite(2, 4, 0, 7), c0square::validation_error);
  REQUIRE_THROWS_AS(c0square::random_suite(1, 4, 5, 7), c0square::validation_error);
  REQUIRE_THROWS_AS(c0square::random_suite(2, 9, 5, 7), c0square::validation_error);
}
