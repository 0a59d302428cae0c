#include "flagbkk/univariate.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace flagbkk {

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UnivariatePolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigInt UnivariatePolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::complex<double> UnivariatePolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  std::vector<BigInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  return p + BigInt(-1) * q;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const BigInt& c, const UnivariatePolynomial& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned e) const {
  UnivariatePolynomial r({BigInt(1)});
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned k, const BigInt& c) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return UnivariatePolynomial(std::move(v));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt sylvester_resultant(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(size),
                                     std::vector<BigInt>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) s[row][row + k] = p.coefficient(m - k);
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) s[n + row][row + k] = q.coefficient(n - k);
  }
  return bareiss_determinant(std::move(s));
}

UnivariatePolynomial strip_zero_roots(const UnivariatePolynomial& p) {
  const auto& c = p.coefficients();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  return UnivariatePolynomial(std::vector<BigInt>(c.begin() + static_cast<long>(k), c.end()));
}

std::string to_string(const UnivariatePolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    BigInt c = p.coefficient(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt mag = abs(c);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace flagbkk
