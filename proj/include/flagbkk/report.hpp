#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagbkk/contraction.hpp"
#include "flagbkk/discriminant.hpp"
#include "flagbkk/flag_model.hpp"
#include "flagbkk/solver.hpp"
#include "json.hpp"

namespace flagbkk {

using Json = nlohmann::json;

struct CensusOrbitSummary {
  int label = 0;
  ExponentVector normal;
  int dim = 0;
  FaceClass klass = FaceClass::MarkedOther;
  int point_count = 0;
  std::vector<std::string> members;
};

struct PolytopeReport {
  int points = 0;
  int vertices = 0;
  int facets = 0;
  std::vector<int> f_vector;
  BigInt volume;
  int marked_faces = 0;
  std::vector<CensusOrbitSummary> orbits;
};

PolytopeReport polytope_report();

struct SolveRequest {
  std::string method = "multistart";
  SolverOptions options;
};

struct SolveReport {
  SolutionSet solutions;
  /// Set when some degeneracy certificate fires.
  std::string warning;
};

SolveReport solve_report(const FlagParams& params, const SolveRequest& request);

struct AnalysisReport {
  FlagParams params;
  IsotropyDimensions dimensions;
  StructureConstants structure_constants;
  CurvatureCoefficients coefficients;
  BigInt volume;
  std::vector<CensusOrbitSummary> census;
  DiscriminantReport discriminant;
  std::string verdict;
  std::optional<SolveReport> solve;
};

AnalysisReport analysis_report(const FlagParams& params, const DiscriminantOptions& options = {},
                               const std::optional<SolveRequest>& solve = std::nullopt);

struct ContractionReport {
  FlagParams params;
  std::string face_id;
  ExponentVector normal;
  LaurentPolynomial curvature;
  FaceReport certificate;
  std::optional<FamilyVerification> family;
  std::string status;
};

/// Throws std::invalid_argument for an unknown face id.
ContractionReport contraction_report(const FlagParams& params, const std::string& face_id);

/// Exact values are strings ("num/den"); complex numbers are [re, im] pairs;
/// doubles use the shortest representation that reads back to the same value.
Json to_json(const FlagParams& p);
Json to_json(const Solution& s);
Json to_json(const SolutionSet& s);
Json to_json(const ProbeWitness& w);
Json to_json(const FaceReport& f);
Json to_json(const DiscriminantReport& r);
Json to_json(const FamilyVerification& v);
Json to_json(const DegenerateTriple& d);
Json to_json(const PolytopeReport& r);
Json to_json(const SolveReport& r);
Json to_json(const AnalysisReport& r);
Json to_json(const ContractionReport& r);
Json to_json(const LaurentPolynomial& p);

FlagParams flag_params_from_json(const Json& j);
Solution solution_from_json(const Json& j);
SolutionSet solution_set_from_json(const Json& j);
ProbeWitness probe_witness_from_json(const Json& j);
FaceReport face_report_from_json(const Json& j);
DiscriminantReport discriminant_report_from_json(const Json& j);
FamilyVerification family_verification_from_json(const Json& j);
DegenerateTriple degenerate_triple_from_json(const Json& j);
PolytopeReport polytope_report_from_json(const Json& j);
SolveReport solve_report_from_json(const Json& j);
AnalysisReport analysis_report_from_json(const Json& j);
ContractionReport contraction_report_from_json(const Json& j);
LaurentPolynomial laurent_from_json(const Json& j);

}  // namespace flagbkk
