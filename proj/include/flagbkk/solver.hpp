#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagbkk/curvature.hpp"
#include "flagbkk/laurent.hpp"

namespace flagbkk {

/// The Einstein equations with t6 = 1 and each equation multiplied by the
/// smallest monomial that removes negative exponents.
struct ClearedSystem {
  FlagParams params;
  /// Five polynomials in t1..t5.
  std::vector<LaurentPolynomial> equations;
  std::vector<int> degrees;
  /// Multiplier of each equation, in all six variables.
  std::vector<ExponentVector> multipliers;
};

ClearedSystem clear_denominators(const EinsteinSystem& sys);

enum class SolutionTag { RealPositive, RealMixedSign, Complex };

std::string to_string(SolutionTag tag);
SolutionTag solution_tag_from_string(const std::string& s);

struct Solution {
  /// t1..t5; t6 = 1 is implied.
  ComplexPoint t;
  /// residual(params, (t, 1)).
  double residual = 0.0;
  /// Condition number of the scaled Jacobian of the Laurent equations.
  double condition = 0.0;
  SolutionTag tag = SolutionTag::Complex;
};

struct SolutionSet {
  FlagParams params;
  std::string method;
  std::uint64_t seed = 0;
  std::vector<Solution> points;
  /// Starts or paths attempted.
  int attempts = 0;
  /// Homotopy paths that stopped well before reaching the target system.
  int path_failures = 0;
  /// Paths that stalled within the endgame window of the target system;
  /// their endpoints are still refined and filtered.
  int singular_endpoints = 0;
  /// Converged torus points rejected as ill-conditioned (possible clusters).
  int ill_conditioned = 0;
  /// Converged torus points rejected by the residual test.
  int residual_rejects = 0;
  /// Distinct well-conditioned torus endpoints reached by more than one path.
  int repeated_endpoints = 0;
};

struct SolverOptions {
  int starts = 20000;
  std::uint64_t seed = 1;
  double tol_residual = 1e-10;
  double tol_dedup = 1e-6;
  double torus_threshold = 1e-8;
  double condition_limit = 1e8;
  unsigned threads = 0;
};

/// Damped Newton from random complex starts, then refinement and filtering.
SolutionSet multistart_solve(const ClearedSystem& cs, const SolverOptions& options = {});

/// Projective total-degree homotopy from x_i^{d_i} - 1 with a random complex
/// constant, tracking every path.
SolutionSet homotopy_solve(const ClearedSystem& cs, const SolverOptions& options = {});

/// Real when all imaginary parts are below `tol` after dividing by the phase
/// of the largest coordinate; real-positive when in addition all real parts
/// are positive. The implied t6 = 1 counts as a coordinate.
SolutionTag classify_point(const ComplexPoint& t, double tol = 1e-8);

SolutionSet classify_solutions(SolutionSet ss);

/// All solutions of x_i^{d_i} = 1, in lexicographic order of root indices.
std::vector<ComplexPoint> start_solutions(const std::vector<int>& degrees);

/// Appends t6 = 1.
ComplexPoint homogeneous_point(const ComplexPoint& t);

/// Relative distance max_i |a_i - b_i| / max(1, max_i |a_i|).
double relative_distance(const ComplexPoint& a, const ComplexPoint& b);

/// Index of a point of `set` within `tol` of `p`, or -1.
int find_solution(const SolutionSet& set, const ComplexPoint& p, double tol);

}  // namespace flagbkk
