#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagbkk/flag_model.hpp"
#include "flagbkk/laurent.hpp"
#include "flagbkk/polytope.hpp"
#include "flagbkk/univariate.hpp"

namespace flagbkk {

/// The parameter-independent polytope data, built once.
struct PolytopeGeometry {
  NewtonPolytope polytope;
  std::vector<FaceDescriptor> lattice;
  SymmetryGroup group;
  MarkedFaceCensus census;
  BigInt volume;
};

const PolytopeGeometry& bc2_geometry();

/// t^{-v} times the truncation of the scaled curvature to a face.
struct TruncatedSystem {
  FaceDescriptor face;
  /// Lexicographically smallest vertex of the face.
  ExponentVector base_vertex;
  /// Homogeneous of degree 0.
  LaurentPolynomial poly;
  /// t_i d(poly)/dt_i; on the torus these vanish together with the plain partials.
  std::vector<LaurentPolynomial> gradient;
};

/// Throws std::invalid_argument unless `face` is a proper face of the polytope.
TruncatedSystem truncated_system(const FlagParams& params, const FaceDescriptor& face);
TruncatedSystem truncated_system(const FlagParams& params, PointMask face);

/// c_A c_D - c_B c_C for a four-point parallelogram, where A + D = B + C and
/// A is the lexicographically smallest point.
Rational parallelogram_determinant(const FlagParams& params, const FaceDescriptor& face);

/// Closed-form face conditions by name.
///
/// G2: a1b2 - a2b1. G1_1x, G1_2x: b2b5 - b3^2 and b1b4 - b3^2.
/// G11_12, G11_21: gamma11_certificate at the parameters and at the swapped ones.
/// G13_branch: b1(a1+2b1) - b2(a2+2b2).
/// G3_a1b1, G3_a2b2: a1+2b1 and a2+2b2 (always positive; also cover G4-G6, G8).
/// G7_12, G7_21: the forced value -b2b4/(b1b5) of a real square, and its mirror.
/// G9_lhs_12, G9_rhs_12 (and _21): 4(b3^2-b2b5)(a2+2b2) and a5^2 b2.
/// G10_12, G10_21: a5 and a4.
std::map<std::string, Rational> closed_form_tests(const FlagParams& params);

struct Gamma12Polynomials {
  UnivariatePolynomial p1;  // degree 5
  UnivariatePolynomial p2;  // degree 6
};

struct Gamma13Polynomials {
  UnivariatePolynomial q1_minus;  // degree 8
  UnivariatePolynomial q1_plus;   // degree 8
  UnivariatePolynomial q2;        // degree 4
};

Gamma12Polynomials build_gamma12_polynomials(const FlagParams& params);
Gamma13Polynomials build_gamma13_polynomials(const FlagParams& params);

/// Resultants of the two families. The `_torus` values first divide out roots
/// at the origin, which do not correspond to torus points.
struct ResultantCertificates {
  BigInt gamma12;
  BigInt gamma12_torus;
  BigInt gamma13_minus;
  BigInt gamma13_minus_torus;
  BigInt gamma13_plus;
  BigInt gamma13_plus_torus;
};

ResultantCertificates resultant_certificates(const FlagParams& params);

struct ProbeBudget {
  int starts = 400;
  int max_iterations = 100;
  std::uint64_t seed = 1;
};

struct ProbeWitness {
  /// Point of (C*)^6 at which poly and its gradient vanish.
  ComplexPoint torus;
  /// The same point in face-local logarithmic coordinates.
  std::vector<Complex> local;
  /// max(|poly|, |gradient|) over the sum of absolute term values.
  double residual = 0.0;
  int starts_used = 0;
};

/// Multistart Newton for critical points of the truncation in face-local
/// coordinates; a critical point is kept only if the value vanishes as well.
std::optional<ProbeWitness> numeric_singularity_probe(const TruncatedSystem& ts,
                                                      const ProbeBudget& budget = {});

/// Relative size of poly and its gradient at a torus point.
double singularity_residual(const TruncatedSystem& ts, const ComplexPoint& t);

enum class FaceVerdict { Nonsingular, Singular, AlwaysInconsistent };

std::string to_string(FaceVerdict v);
FaceVerdict face_verdict_from_string(const std::string& s);

struct NamedValue {
  std::string name;
  Rational value;
  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct FaceReport {
  std::string face;
  int orbit_label = 0;
  ExponentVector normal;
  FaceClass klass = FaceClass::MarkedOther;
  FaceVerdict verdict = FaceVerdict::Nonsingular;
  std::string certificate_name;
  Rational certificate;
  /// Further exact values examined for this face.
  std::vector<NamedValue> details;
  std::optional<ProbeWitness> witness;
  /// The probe found a witness the exact analysis rules out.
  bool discrepancy = false;
};

struct DiscriminantReport {
  FlagParams params;
  BigInt volume;
  int automatic_faces = 0;
  std::vector<FaceReport> faces;
  std::map<std::string, Rational> closed_forms;
  /// Stated conditions from degeneracy_equations, kept for comparison.
  std::map<std::string, Rational> stated_conditions;
  std::vector<std::string> firing;
  bool certified = false;
  std::string verdict;
};

struct DiscriminantOptions {
  bool probe = true;
  ProbeBudget budget;
  unsigned threads = 0;
};

/// Parameters at which the closed forms of a census member are evaluated.
FlagParams member_params(const FlagParams& params, const CensusMember& member);

/// Exact certificate and verdict of one marked face, without probing.
FaceReport face_certificate(const FlagParams& params, const CensusOrbit& orbit,
                            const CensusMember& member);

DiscriminantReport discriminant_report(const FlagParams& params,
                                       const DiscriminantOptions& options = {});

}  // namespace flagbkk
