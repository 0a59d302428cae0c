#include "flagbkk/curvature.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

namespace flagbkk {

namespace {

ExponentVector unit(std::initializer_list<std::pair<int, int>> entries) {
  ExponentVector e(kSummands, 0);
  for (auto [index, power] : entries) e[static_cast<std::size_t>(index - 1)] += power;
  return e;
}

}  // namespace

LaurentPolynomial scalar_curvature(const FlagParams& params) {
  const auto dims = dimensions(params);
  const auto sc = structure_constants(params);
  LaurentPolynomial two_s(kSummands);
  for (int i = 1; i <= 6; ++i) two_s.add_term(unit({{i, -1}}), dims.N[i - 1]);
  const Rational sixth(1, 6);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      for (int k = 1; k <= 6; ++k) {
        const Rational c = bracket(sc, i, j, k);
        if (c == 0) continue;
        // (t_i^2 + t_j^2 + t_k^2) / (t_i t_j t_k)
        for (int sq : {i, j, k}) {
          ExponentVector e = unit({{i, -1}, {j, -1}, {k, -1}});
          e[static_cast<std::size_t>(sq - 1)] += 2;
          two_s.add_term(e, -sixth * c);
        }
      }
    }
  }
  return scale(two_s, Rational(1, 2));
}

LaurentPolynomial scaled_scalar_curvature(const FlagParams& params) {
  const auto c = curvature_coefficients(params);
  const auto inv = inverse_coefficients(c);
  LaurentPolynomial s(kSummands);
  for (int i = 1; i <= 6; ++i) s.add_term(unit({{i, -1}}), Rational(inv[i - 1]));
  auto cubic = [&](int i, int j, int k, const BigInt& coeff) {
    s.add_term(unit({{i, 1}, {j, -1}, {k, -1}}), Rational(-coeff));
    s.add_term(unit({{i, -1}, {j, 1}, {k, -1}}), Rational(-coeff));
    s.add_term(unit({{i, -1}, {j, -1}, {k, 1}}), Rational(-coeff));
  };
  cubic(1, 3, 4, c.b1());
  cubic(2, 3, 4, c.b2());
  cubic(3, 5, 6, c.b3());
  cubic(4, 5, 6, c.b3());
  s.add_term(unit({{1, 1}, {5, -2}}), Rational(-c.b4()));
  s.add_term(unit({{2, 1}, {6, -2}}), Rational(-c.b5()));
  return s;
}

RicciComponents ricci_components(const FlagParams& params) {
  const auto s = scalar_curvature(params);
  const auto dims = dimensions(params);
  RicciComponents out;
  for (std::size_t i = 0; i < kSummands; ++i) {
    ExponentVector e(kSummands, 0);
    e[i] = 1;
    out.r[i] = scale(shift(differentiate(s, i), e), Rational(-1, dims.N[i]));
  }
#ifndef NDEBUG
  {
    const auto shown = display_ricci(params);
    for (std::size_t i = 0; i < kSummands; ++i) assert(out.r[i] == shown.r[i]);
  }
#endif
  return out;
}

RicciComponents display_ricci(const FlagParams& params) {
  const auto c = curvature_coefficients(params);
  const auto dims = dimensions(params);
  const Rational d2 = 2 * params.denominator();
  const Rational d1 = params.denominator();
  const Rational br134 = Rational(c.b1()) / d2;
  const Rational br234 = Rational(c.b2()) / d2;
  const Rational br356 = Rational(c.b3()) / d2;
  const Rational br456 = br356;
  const Rational br155 = Rational(c.b4()) / d1;
  const Rational br266 = Rational(c.b5()) / d1;

  RicciComponents out;
  for (auto& r : out.r) r = LaurentPolynomial(kSummands);
  auto half_inverse = [&](int i) { out.r[i - 1].add_term(unit({{i, -1}}), Rational(1, 2)); };
  // Adds (coef/(2 N_i)) [ijk] (s1 t_i t_j^-1 t_k^-1 + s2 t_i^-1 t_j t_k^-1 + s3 t_i^-1 t_j^-1 t_k)
  // into r_target, with the + sign on the monomial whose numerator is t_target.
  auto triple = [&](int target, int i, int j, int k, const Rational& br) {
    const Rational w = br / (2 * dims.N[target - 1]);
    LaurentPolynomial& r = out.r[target - 1];
    r.add_term(unit({{i, 1}, {j, -1}, {k, -1}}), i == target ? w : -w);
    r.add_term(unit({{i, -1}, {j, 1}, {k, -1}}), j == target ? w : -w);
    r.add_term(unit({{i, -1}, {j, -1}, {k, 1}}), k == target ? w : -w);
  };

  for (int i = 1; i <= 6; ++i) half_inverse(i);
  triple(1, 1, 3, 4, br134);
  out.r[0].add_term(unit({{1, -1}}), -2 * br155 / (4 * dims.N[0]));
  out.r[0].add_term(unit({{1, 1}, {5, -2}}), br155 / (4 * dims.N[0]));
  triple(2, 2, 3, 4, br234);
  out.r[1].add_term(unit({{2, -1}}), -2 * br266 / (4 * dims.N[1]));
  out.r[1].add_term(unit({{2, 1}, {6, -2}}), br266 / (4 * dims.N[1]));
  triple(3, 1, 3, 4, br134);
  triple(3, 2, 3, 4, br234);
  triple(3, 3, 5, 6, br356);
  triple(4, 1, 3, 4, br134);
  triple(4, 2, 3, 4, br234);
  triple(4, 4, 5, 6, br456);
  triple(5, 3, 5, 6, br356);
  triple(5, 4, 5, 6, br456);
  out.r[4].add_term(unit({{1, 1}, {5, -2}}), -br155 / (2 * dims.N[4]));
  triple(6, 3, 5, 6, br356);
  triple(6, 4, 5, 6, br456);
  out.r[5].add_term(unit({{2, 1}, {6, -2}}), -br266 / (2 * dims.N[5]));
  return out;
}

EinsteinSystem einstein_system(const FlagParams& params) {
  const auto ricci = ricci_components(params);
  EinsteinSystem sys{params, {LaurentPolynomial(kSummands), LaurentPolynomial(kSummands),
                                LaurentPolynomial(kSummands), LaurentPolynomial(kSummands),
                                LaurentPolynomial(kSummands)}};
  for (std::size_t i = 0; i + 1 < kSummands; ++i) sys.equations[i] = ricci.r[i] - ricci.r[i + 1];
  return sys;
}

double residual(const RicciComponents& ricci, std::span<const Complex> t) {
  std::array<Complex, kSummands> v;
  for (std::size_t i = 0; i < kSummands; ++i) v[i] = evaluate(ricci.r[i], t);
  double worst = 0.0;
  for (std::size_t i = 0; i < kSummands; ++i) {
    for (std::size_t j = i + 1; j < kSummands; ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
  }
  return worst;
}

double residual(const FlagParams& params, std::span<const Complex> t) {
  return residual(ricci_components(params), t);
}

long double residual_extended(const RicciComponents& ricci, std::span<const Complex> t) {
  using LComplex = std::complex<long double>;
  std::array<LComplex, kSummands> v{};
  for (std::size_t i = 0; i < kSummands; ++i) {
    for (const auto& [e, c] : ricci.r[i].terms()) {
      LComplex term(static_cast<long double>(c.get_num().get_d()) /
                    static_cast<long double>(c.get_den().get_d()));
      for (std::size_t k = 0; k < e.size(); ++k) {
        const LComplex z(t[k].real(), t[k].imag());
        for (int p = 0; p < std::abs(e[k]); ++p) term = e[k] > 0 ? term * z : term / z;
      }
      v[i] += term;
    }
  }
  long double worst = 0.0L;
  for (std::size_t i = 0; i < kSummands; ++i) {
    for (std::size_t j = i + 1; j < kSummands; ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
  }
  return worst;
}

}  // namespace flagbkk
