#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "flagbkk/laurent.hpp"

namespace flagbkk::detail {

/// A polynomial flattened into coefficient and exponent arrays.
struct CompiledPolynomial {
  std::vector<long double> coeffs;
  /// Row-major, `vars` entries per term; all exponents nonnegative.
  std::vector<int> exps;
  int vars = 0;
  int max_exponent = 0;

  CompiledPolynomial() = default;

  /// Coefficients are divided by `scale`.
  CompiledPolynomial(const LaurentPolynomial& p, long double scale = 1.0L) : vars(static_cast<int>(p.arity())) {
    for (const auto& [e, c] : p.terms()) {
      coeffs.push_back(static_cast<long double>(c.get_num().get_d()) /
                       static_cast<long double>(c.get_den().get_d()) / scale);
      for (int x : e) {
        exps.push_back(x);
        max_exponent = std::max(max_exponent, x);
      }
    }
  }

  std::size_t size() const { return coeffs.size(); }
};

/// Largest absolute coefficient.
inline long double max_coefficient(const LaurentPolynomial& p) {
  long double best = 0.0L;
  for (const auto& [e, c] : p.terms()) best = std::max(best, std::fabs(static_cast<long double>(c.get_d())));
  return best == 0.0L ? 1.0L : best;
}

/// Power table pw[v][k] = x_v^k for k <= max_exponent.
template <class T>
void fill_powers(const std::vector<std::complex<T>>& x, int max_exponent,
                 std::vector<std::vector<std::complex<T>>>& pw) {
  pw.resize(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    pw[v].resize(static_cast<std::size_t>(max_exponent) + 1);
    pw[v][0] = std::complex<T>(1);
    for (int k = 1; k <= max_exponent; ++k) pw[v][k] = pw[v][k - 1] * x[v];
  }
}

/// Value and gradient from a power table.
template <class T>
std::complex<T> evaluate_with_gradient(const CompiledPolynomial& p,
                                       const std::vector<std::vector<std::complex<T>>>& pw,
                                       std::complex<T>* grad) {
  using C = std::complex<T>;
  const int n = p.vars;
  C value(0);
  for (int v = 0; v < n; ++v) grad[v] = C(0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int* e = &p.exps[k * static_cast<std::size_t>(n)];
    const C c(static_cast<T>(p.coeffs[k]));
    C term = c;
    for (int v = 0; v < n; ++v) term *= pw[v][e[v]];
    value += term;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 0) continue;
      C d = c * static_cast<T>(e[v]);
      for (int w = 0; w < n; ++w) d *= (w == v) ? pw[w][e[w] - 1] : pw[w][e[w]];
      grad[v] += d;
    }
  }
  return value;
}

/// Sum of absolute term values, for relative residuals.
template <class T>
T term_magnitude(const CompiledPolynomial& p, const std::vector<std::vector<std::complex<T>>>& pw) {
  const int n = p.vars;
  T total = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int* e = &p.exps[k * static_cast<std::size_t>(n)];
    T term = std::fabs(static_cast<T>(p.coeffs[k]));
    for (int v = 0; v < n; ++v) term *= std::abs(pw[v][e[v]]);
    total += term;
  }
  return total;
}

/// Solves a small dense complex system by Gaussian elimination with partial
/// pivoting; returns false when a pivot vanishes.
template <class T>
bool solve_dense(std::vector<std::complex<T>> a, std::vector<std::complex<T>>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) == T(0)) return false;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const auto f = a[r * n + col] / a[col * n + col];
      if (f == std::complex<T>(0)) continue;
      for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    auto s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r * n + k] * b[k];
    b[r] = s / a[r * n + r];
  }
  return true;
}

}  // namespace flagbkk::detail
