#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace flagbkk {

using Rational = mpq_class;
using BigInt = mpz_class;
using Complex = std::complex<double>;

/// Exponent of a Laurent monomial. Entries may be negative.
using ExponentVector = std::vector<int>;

/// A point of (C*)^d.
using ComplexPoint = std::vector<Complex>;

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered lexicographically by exponent vector; no
/// stored coefficient is ever zero.  Values are immutable from the outside
/// apart from `add_term`, which is meant for construction.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit LaurentPolynomial(std::size_t arity = 0);

  static LaurentPolynomial constant(std::size_t arity, const Rational& c);
  static LaurentPolynomial monomial(ExponentVector exponent, const Rational& c = 1);
  /// The coordinate function t_var (0-based).
  static LaurentPolynomial variable(std::size_t arity, std::size_t var);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVector& exponent) const;

  /// Accumulates c·t^exponent, dropping the term if it cancels.
  void add_term(const ExponentVector& exponent, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial subtract(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& c);

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator-(const LaurentPolynomial& p);
LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p);

/// Formal partial derivative with respect to t_var (0-based).
LaurentPolynomial differentiate(const LaurentPolynomial& p, std::size_t var);

/// Floating evaluation, summed in lexicographic exponent order.
Complex evaluate(const LaurentPolynomial& p, std::span<const Complex> z);

/// Exact evaluation at a rational torus point.
Rational evaluate_exact(const LaurentPolynomial& p, std::span<const Rational> t);

std::vector<ExponentVector> support(const LaurentPolynomial& p);

/// Terms whose exponent maximizes <normal, exponent> over the support.
LaurentPolynomial face_restriction(const LaurentPolynomial& p, std::span<const int> normal);

/// Renames variables: t_i becomes t_{perm[i]}.
LaurentPolynomial permute_variables(const LaurentPolynomial& p, std::span<const int> perm);

/// Multiplies by the monomial t^shift.
LaurentPolynomial shift(const LaurentPolynomial& p, const ExponentVector& shift);

/// Fixes variable `var` to 1 and drops it, reducing the arity by one.
LaurentPolynomial set_variable_to_one(const LaurentPolynomial& p, std::size_t var);

std::string to_string(const LaurentPolynomial& p);

/// "num/den", or just "num" for integers.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace flagbkk
