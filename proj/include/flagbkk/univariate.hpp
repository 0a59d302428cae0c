#pragma once

#include <complex>
#include <string>
#include <vector>

#include "flagbkk/laurent.hpp"

namespace flagbkk {

/// Dense univariate polynomial with big-integer coefficients, ascending degree.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int k) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& p, const UnivariatePolynomial& q);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& p, const UnivariatePolynomial& q);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& p, const UnivariatePolynomial& q);
  friend UnivariatePolynomial operator*(const BigInt& c, const UnivariatePolynomial& p);
  friend bool operator==(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  UnivariatePolynomial pow(unsigned e) const;

  /// x^k.
  static UnivariatePolynomial monomial(unsigned k, const BigInt& c = 1);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Determinant of the Sylvester matrix, by fraction-free (Bareiss) elimination.
BigInt sylvester_resultant(const UnivariatePolynomial& p, const UnivariatePolynomial& q);

/// Determinant of a square integer matrix, fraction-free.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Divides out the largest power of x.
UnivariatePolynomial strip_zero_roots(const UnivariatePolynomial& p);

std::string to_string(const UnivariatePolynomial& p, const std::string& var = "z");

}  // namespace flagbkk
