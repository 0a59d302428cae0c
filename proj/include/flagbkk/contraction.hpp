#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flagbkk/discriminant.hpp"

namespace flagbkk {

/// A contraction by a proper face, represented by its curvature: the
/// restriction of the scaled curvature to the face.
struct ContractionModel {
  FlagParams params;
  FaceDescriptor face;
  std::string face_id;
  LaurentPolynomial curvature;
};

/// Throws std::invalid_argument unless `face` is a nonempty proper face.
ContractionModel contract(const FlagParams& params, const FaceDescriptor& face);
/// Face given by census id such as "G1_11"; throws std::invalid_argument for unknown ids.
ContractionModel contract(const FlagParams& params, const std::string& face_id);

struct FlatnessCheck {
  bool flat = false;
  /// max(|s|, |t_i ds/dt_i|) relative to the sum of absolute term values.
  double residual = 0.0;
};

/// Numeric test that the curvature and its gradient vanish at a torus point;
/// throws std::invalid_argument on a zero coordinate.
FlatnessCheck is_ricci_flat(const ContractionModel& model, const ComplexPoint& t, double tol = 1e-10);

/// Exact test that the curvature and all six partial derivatives vanish.
bool is_ricci_flat_exact(const ContractionModel& model, const std::vector<Rational>& t);

/// The four contractions by the parallelogram faces of the first orbit.
enum class FamilyVariant { G1_11, G1_12, G1_21, G1_22 };

std::string to_string(FamilyVariant v);
FamilyVariant family_variant_from_string(const std::string& s);
const std::vector<FamilyVariant>& all_family_variants();

/// Determinant certificate governing the variant: b2b5 - b3^2 or b1b4 - b3^2.
Rational family_certificate(const FlagParams& params, FamilyVariant variant);

/// The condition 8 n_i (2 n3 + 1) - (n_j - 1)^2 as stated alongside the families.
Rational stated_family_condition(const FlagParams& params, FamilyVariant variant);

using Metric = std::array<Rational, kSummands>;

/// The family metric with free parameters t1, t2, t3 > 0; throws
/// std::domain_error when the certificate is nonzero and std::invalid_argument
/// for nonpositive parameters.
Metric ricci_flat_family(const FlagParams& params, FamilyVariant variant, const Rational& t1, const Rational& t2,
                         const Rational& t3);

struct FamilyVerification {
  FlagParams params;
  FamilyVariant variant = FamilyVariant::G1_11;
  Rational certificate;
  Rational stated_condition;
  /// The certificate vanishes.
  bool applicable = false;
  int samples = 0;
  /// Samples at which the family formula gives an exactly flat point.
  int flat_samples = 0;
  /// Every sample has five positive components and a negative last one.
  bool lorentzian = false;
  bool verified = false;
};

/// Evaluates the family formula at `samples` random rational (t1, t2, t3) in
/// (0, 10]^3 and checks flatness exactly, whether or not the certificate vanishes.
FamilyVerification verify_family(const FlagParams& params, FamilyVariant variant, int samples = 100,
                                 std::uint64_t seed = 1);

struct DegenerateTriple {
  FlagParams params;
  std::vector<std::string> firing;
};

/// Exact certificates over 2 <= n_i <= bound; lists the triples where any fires.
std::vector<DegenerateTriple> search_degenerate_parameters(int bound, unsigned threads = 0);

}  // namespace flagbkk
