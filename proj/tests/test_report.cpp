#include "doctest.h"
#include "flagbkk/report.hpp"

using namespace flagbkk;

namespace {

template <class T, class Parse>
void check_round_trip(const T& value, Parse parse) {
  const Json j = to_json(value);
  const Json reparsed = Json::parse(j.dump());
  CHECK(to_json(parse(reparsed)) == j);
}

}  // namespace

TEST_CASE("exact values are rendered as strings") {
  const auto r = contraction_report({2, 3, 2}, "G1_11");
  const Json j = to_json(r);
  CHECK(j["certificate"]["certificate"] == "-2880");
  CHECK(j["family"]["certificate"] == "-2880");
  CHECK(j["curvature"]["terms"].size() == 4);
  CHECK(r.status == "no Einstein metric on contraction (certificate −2880)");
}

TEST_CASE("laurent polynomials round-trip") {
  const auto m = contract(FlagParams{2, 7, 4}, "G1_11");
  CHECK(laurent_from_json(Json::parse(to_json(m.curvature).dump())) == m.curvature);
}

TEST_CASE("doubles keep every bit through text") {
  Solution s;
  s.t = {Complex(0.1, -1.0 / 3.0), Complex(std::sqrt(2.0), 1e-300), Complex(-7.0, 0.0), Complex(1.0, 2.0),
         Complex(3.0, 4.0)};
  s.residual = 1.234567890123456789e-15;
  s.condition = 12345.678901234567;
  s.tag = SolutionTag::Complex;
  const Solution back = solution_from_json(Json::parse(to_json(s).dump()));
  CHECK(back.t == s.t);
  CHECK(back.residual == s.residual);
  CHECK(back.condition == s.condition);
}

TEST_CASE("polytope report round-trips") {
  const auto r = polytope_report();
  CHECK(r.volume == 132);
  CHECK(r.marked_faces == 27);
  CHECK(r.orbits.size() == 13);
  check_round_trip(r, polytope_report_from_json);
}

TEST_CASE("discriminant report with witnesses round-trips") {
  DiscriminantOptions options;
  options.budget.starts = 60;
  const auto r = discriminant_report({2, 7, 4}, options);
  bool any_witness = false;
  for (const auto& f : r.faces) any_witness = any_witness || f.witness.has_value();
  CHECK(any_witness);
  check_round_trip(r, discriminant_report_from_json);
}

TEST_CASE("analysis report with a solution summary round-trips") {
  DiscriminantOptions options;
  options.probe = false;
  SolveRequest solve;
  solve.options.starts = 300;
  const auto r = analysis_report({2, 3, 2}, options, solve);
  CHECK(r.verdict == "certified: E = ν(Δ) = 132");
  REQUIRE(r.solve.has_value());
  CHECK(r.solve->warning.empty());
  CHECK(!r.solve->solutions.points.empty());
  check_round_trip(r, analysis_report_from_json);
}

TEST_CASE("solve report warns on degenerate parameters") {
  SolveRequest solve;
  solve.options.starts = 50;
  const auto r = solve_report({2, 2, 2}, solve);
  CHECK(r.warning == "parameters degenerate; BKK certificate unavailable");
  check_round_trip(r, solve_report_from_json);
  solve.method = "bisection";
  CHECK_THROWS_AS(solve_report({2, 3, 2}, solve), std::invalid_argument);
}

TEST_CASE("contraction reports round-trip") {
  const auto flat = contraction_report({2, 7, 4}, "G1_11");
  CHECK(flat.status == "Ricci-flat family verified (exact)");
  check_round_trip(flat, contraction_report_from_json);
  const auto g2 = contraction_report({2, 3, 2}, "G2");
  CHECK(g2.certificate.certificate_name.find("a1") != std::string::npos);
  CHECK(!g2.family.has_value());
  check_round_trip(g2, contraction_report_from_json);
  CHECK_THROWS_AS(contraction_report({2, 3, 2}, "G42"), std::invalid_argument);
}

TEST_CASE("small records round-trip") {
  check_round_trip(verify_family({7, 2, 4}, FamilyVariant::G1_21, 5), family_verification_from_json);
  check_round_trip(DegenerateTriple{{2, 2, 3}, {"Γ2 n1=n2"}}, degenerate_triple_from_json);
  check_round_trip(FlagParams{4, 5, 6}, flag_params_from_json);
  CHECK_THROWS(flag_params_from_json(Json{{"n1", 1}, {"n2", 2}, {"n3", 2}}));
}
