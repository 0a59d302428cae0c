#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "flagbkk/laurent.hpp"

namespace flagbkk {

inline constexpr std::size_t kSummands = 6;

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FlagParams {
  int n1 = 2;
  int n2 = 2;
  int n3 = 2;

  /// Throws InvalidParams unless every n_i >= 2.
  static FlagParams make(int n1, int n2, int n3);

  int rank_sum() const { return n1 + n2 + n3; }
  /// 2(n1+n2+n3) - 1, the common denominator of the structure constants.
  int denominator() const { return 2 * rank_sum() - 1; }
  /// The parameters with n1 and n2 exchanged.
  FlagParams swapped() const { return {n2, n1, n3}; }

  friend bool operator==(const FlagParams&, const FlagParams&) = default;
};

std::string to_string(const FlagParams& p);

struct IsotropyDimensions {
  std::array<long, kSummands> N{};
  long total() const;
};

IsotropyDimensions dimensions(const FlagParams& params);

/// dim G - dim H computed from the groups, independent of the summand split.
long isotropy_dimension_from_groups(const FlagParams& params);

struct StructureConstants {
  Rational b134, b234, b356, b456, b155, b266;
};

StructureConstants structure_constants(const FlagParams& params);

/// The constant for an unordered index triple (1-based), zero if absent.
Rational bracket(const StructureConstants& sc, int i, int j, int k);

/// Coefficients of the scaled scalar curvature 4(2m-1)s; index 0 is a1.
struct CurvatureCoefficients {
  std::array<BigInt, 5> a;
  std::array<BigInt, 5> b;
  const BigInt& a1() const { return a[0]; }
  const BigInt& a2() const { return a[1]; }
  const BigInt& a3() const { return a[2]; }
  const BigInt& a4() const { return a[3]; }
  const BigInt& a5() const { return a[4]; }
  const BigInt& b1() const { return b[0]; }
  const BigInt& b2() const { return b[1]; }
  const BigInt& b3() const { return b[2]; }
  const BigInt& b4() const { return b[3]; }
  const BigInt& b5() const { return b[4]; }
};

CurvatureCoefficients curvature_coefficients(const FlagParams& params);

/// Coefficients of t1^-1 .. t6^-1 in the scaled curvature: (a1,a2,a3,a3,a4,a5).
std::array<BigInt, kSummands> inverse_coefficients(const CurvatureCoefficients& c);

using Root2 = std::array<int, 2>;

struct TRootSystem {
  std::array<Root2, kSummands> positive_roots;
  static TRootSystem bc2();
};

using IndexTriple = std::array<int, 3>;

/// Sorted triples (i <= j <= k, 1-based) with some sign choice making
/// w_i +- w_j +- w_k vanish.
std::vector<IndexTriple> siebenthal_triples(const TRootSystem& roots);

/// The expected invariant for the BC2 system.
std::vector<IndexTriple> bc2_siebenthal_triples();

/// Named exact values whose vanishing marks the exceptional parameters.
///
/// Keys: rank_difference (n1-n2), determinant_12/_21 (parallelogram
/// determinants), rank_condition_12/_21 (8 n_i(2n3+1) - (n_j-1)^2),
/// quartic_12/_21 (gamma11_certificate and its mirror), quartic_closed_12/_21
/// (the same condition written in n1, n2, n3), branch_balance
/// (b1(a1+2b1) - b2(a2+2b2)).
std::map<std::string, Rational> degeneracy_equations(const FlagParams& params);

/// 16 a5^2 b1 b5 K - (a5^2 b1 + 4 b5 K - 4 b3^2 (a1 + 2 b1))^2 with K = a1 b2 - a2 b1.
BigInt gamma11_certificate(const CurvatureCoefficients& c);

}  // namespace flagbkk
