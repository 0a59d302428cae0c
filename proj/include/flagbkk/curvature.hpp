#pragma once

#include <array>
#include <span>

#include "flagbkk/flag_model.hpp"
#include "flagbkk/laurent.hpp"

namespace flagbkk {

/// s(t) from the dimensions and the structure constants, summing over all
/// ordered index triples.
LaurentPolynomial scalar_curvature(const FlagParams& params);

/// The scaled curvature 4(2m-1)s assembled from CurvatureCoefficients.
LaurentPolynomial scaled_scalar_curvature(const FlagParams& params);

struct RicciComponents {
  std::array<LaurentPolynomial, kSummands> r;
};

/// r_i = -(t_i / N_i) ds/dt_i.
RicciComponents ricci_components(const FlagParams& params);

/// The six components written out term by term, with the brackets recovered
/// from CurvatureCoefficients instead of the structure-constant formulas.
RicciComponents display_ricci(const FlagParams& params);

struct EinsteinSystem {
  FlagParams params;
  std::array<LaurentPolynomial, kSummands - 1> equations;
};

/// r_i - r_{i+1} for i = 1..5.
EinsteinSystem einstein_system(const FlagParams& params);

/// max_{i<j} |r_i(t) - r_j(t)|.
double residual(const FlagParams& params, std::span<const Complex> t);
double residual(const RicciComponents& ricci, std::span<const Complex> t);

/// Same quantity evaluated in long double.
long double residual_extended(const RicciComponents& ricci, std::span<const Complex> t);

}  // namespace flagbkk
