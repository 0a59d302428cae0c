#include "flagbkk/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace flagbkk {

namespace {

void check_arity(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.arity() != q.arity()) {
    throw ArityError("arity mismatch: " + std::to_string(p.arity()) + " vs " +
                     std::to_string(q.arity()));
  }
}

Complex ipow(Complex z, int e) {
  if (e < 0) return Complex(1.0) / ipow(z, -e);
  Complex r(1.0);
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

Rational ipow(const Rational& q, int e) {
  Rational base = q;
  if (e < 0) {
    base = 1 / base;
    e = -e;
  }
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t arity) : arity_(arity) {}

LaurentPolynomial LaurentPolynomial::constant(std::size_t arity, const Rational& c) {
  LaurentPolynomial p(arity);
  p.add_term(ExponentVector(arity, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector exponent, const Rational& c) {
  LaurentPolynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t arity, std::size_t var) {
  if (var >= arity) throw std::out_of_range("variable index out of range");
  ExponentVector e(arity, 0);
  e[var] = 1;
  return monomial(std::move(e));
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponent, const Rational& c) {
  if (exponent.size() != arity_) throw ArityError("exponent length differs from arity");
  Rational value = c;
  value.canonicalize();
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_arity(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_arity(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial r = p;
  r += q;
  return r;
}

LaurentPolynomial subtract(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial r = p;
  r -= q;
  return r;
}

LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  check_arity(p, q);
  LaurentPolynomial r(p.arity());
  ExponentVector e(p.arity());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& c) {
  LaurentPolynomial r = p;
  r *= c;
  return r;
}

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) { return add(p, q); }
LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return subtract(p, q);
}
LaurentPolynomial operator-(const LaurentPolynomial& p) { return scale(p, -1); }
LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) { return mul(p, q); }
LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) { return scale(p, c); }

LaurentPolynomial differentiate(const LaurentPolynomial& p, std::size_t var) {
  if (var >= p.arity()) throw std::out_of_range("differentiation index out of range");
  LaurentPolynomial r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    ExponentVector d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Complex evaluate(const LaurentPolynomial& p, std::span<const Complex> z) {
  if (z.size() != p.arity()) throw ArityError("point dimension differs from arity");
  Complex sum(0.0);
  for (const auto& [e, c] : p.terms()) {
    Complex term(c.get_d());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && z[i] == Complex(0.0)) {
        throw std::domain_error("zero coordinate with negative exponent");
      }
      term *= ipow(z[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

Rational evaluate_exact(const LaurentPolynomial& p, std::span<const Rational> t) {
  if (t.size() != p.arity()) throw ArityError("point dimension differs from arity");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && t[i] == 0) throw std::domain_error("zero coordinate with negative exponent");
      term *= ipow(t[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::vector<ExponentVector> support(const LaurentPolynomial& p) {
  std::vector<ExponentVector> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.push_back(e);
  return out;
}

LaurentPolynomial face_restriction(const LaurentPolynomial& p, std::span<const int> normal) {
  if (normal.size() != p.arity()) throw ArityError("normal length differs from arity");
  if (std::all_of(normal.begin(), normal.end(), [](int x) { return x == 0; })) {
    throw std::invalid_argument("face normal must be nonzero");
  }
  if (p.is_zero()) throw std::invalid_argument("face restriction of the zero polynomial");
  long best = std::numeric_limits<long>::min();
  for (const auto& [e, c] : p.terms()) {
    long v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += static_cast<long>(normal[i]) * e[i];
    best = std::max(best, v);
  }
  LaurentPolynomial r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    long v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += static_cast<long>(normal[i]) * e[i];
    if (v == best) r.add_term(e, c);
  }
  return r;
}

LaurentPolynomial permute_variables(const LaurentPolynomial& p, std::span<const int> perm) {
  if (perm.size() != p.arity()) throw ArityError("permutation length differs from arity");
  LaurentPolynomial r(p.arity());
  ExponentVector f(p.arity());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial shift(const LaurentPolynomial& p, const ExponentVector& s) {
  if (s.size() != p.arity()) throw ArityError("shift length differs from arity");
  LaurentPolynomial r(p.arity());
  ExponentVector f(p.arity());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] + s[i];
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial set_variable_to_one(const LaurentPolynomial& p, std::size_t var) {
  if (var >= p.arity()) throw std::out_of_range("variable index out of range");
  LaurentPolynomial r(p.arity() - 1);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f;
    f.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var) f.push_back(e[i]);
    }
    r.add_term(f, c);
  }
  return r;
}

std::string rational_to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || is_const) os << rational_to_string(mag);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*t" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  std::string s = os.str();
  // Drop the leading '*' produced for unit coefficients.
  for (std::size_t pos = 0; (pos = s.find("*t", pos)) != std::string::npos;) {
    if (pos == 0 || s[pos - 1] == ' ' || s[pos - 1] == '-') s.erase(pos, 1);
    else ++pos;
  }
  return s;
}

}  // namespace flagbkk
