#include "flagbkk/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "flagbkk/parallel.hpp"
#include "solver_internal.hpp"

namespace flagbkk {

namespace {

constexpr std::size_t kUnknowns = kSummands - 1;

using LComplex = std::complex<long double>;

/// Newton refinement of the cleared system in extended precision.
std::optional<ComplexPoint> refine(const std::vector<detail::CompiledPolynomial>& eqs, const ComplexPoint& start) {
  const int n = static_cast<int>(kUnknowns);
  std::vector<LComplex> x(start.begin(), start.end());
  int max_exp = 0;
  for (const auto& e : eqs) max_exp = std::max(max_exp, e.max_exponent);
  std::vector<std::vector<LComplex>> pw;
  std::vector<LComplex> jac(static_cast<std::size_t>(n * n)), rhs(static_cast<std::size_t>(n));
  for (int it = 0; it < 12; ++it) {
    detail::fill_powers(x, max_exp, pw);
    for (int i = 0; i < n; ++i)
      rhs[i] = -detail::evaluate_with_gradient(eqs[static_cast<std::size_t>(i)], pw, &jac[static_cast<std::size_t>(i * n)]);
    if (!detail::solve_dense(jac, rhs, n)) return std::nullopt;
    long double step = 0.0L, size = 1.0L;
    for (int i = 0; i < n; ++i) {
      x[i] += rhs[i];
      step = std::max(step, std::abs(rhs[i]));
      size = std::max(size, std::abs(x[i]));
    }
    if (!std::isfinite(static_cast<double>(step))) return std::nullopt;
    if (step < 1e-17L * size) break;
  }
  ComplexPoint out(kUnknowns);
  for (std::size_t i = 0; i < kUnknowns; ++i) out[i] = Complex(static_cast<double>(x[i].real()), static_cast<double>(x[i].imag()));
  return out;
}

/// Condition number of the Jacobian of the Laurent equations in logarithmic
/// coordinates, each row scaled by its term magnitude.
double log_condition(const EinsteinSystem& sys, const ComplexPoint& t) {
  const ComplexPoint full = homogeneous_point(t);
  Eigen::MatrixXcd jac(static_cast<Eigen::Index>(kUnknowns), static_cast<Eigen::Index>(kUnknowns));
  for (std::size_t i = 0; i < kUnknowns; ++i) {
    double scale = 0.0;
    std::vector<Complex> row(kUnknowns, Complex(0.0));
    for (const auto& [e, c] : sys.equations[i].terms()) {
      const Complex term = evaluate(LaurentPolynomial::monomial(e, c), full);
      scale += std::abs(term);
      for (std::size_t j = 0; j < kUnknowns; ++j) row[j] += static_cast<double>(e[j]) * term;
    }
    for (std::size_t j = 0; j < kUnknowns; ++j)
      jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j] / scale;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  return smallest == 0.0 ? std::numeric_limits<double>::infinity() : sv(0) / smallest;
}

bool lexicographically_less(const ComplexPoint& a, const ComplexPoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

ClearedSystem clear_denominators(const EinsteinSystem& sys) {
  ClearedSystem cs;
  cs.params = sys.params;
  for (const auto& eq : sys.equations) {
    ExponentVector m(kSummands, 0);
    for (const auto& [e, c] : eq.terms())
      for (std::size_t i = 0; i < kSummands; ++i) m[i] = std::max(m[i], -e[i]);
    const LaurentPolynomial cleared = set_variable_to_one(shift(eq, m), kSummands - 1);
    int degree = 0;
    for (const auto& [e, c] : cleared.terms()) {
      int d = 0;
      for (int x : e) {
        if (x < 0) throw std::logic_error("negative exponent after clearing");
        d += x;
      }
      degree = std::max(degree, d);
    }
    cs.equations.push_back(cleared);
    cs.degrees.push_back(degree);
    cs.multipliers.push_back(m);
  }
  return cs;
}

std::string to_string(SolutionTag tag) {
  switch (tag) {
    case SolutionTag::RealPositive: return "real-positive";
    case SolutionTag::RealMixedSign: return "real-mixed-sign";
    case SolutionTag::Complex: return "complex";
  }
  return "complex";
}

SolutionTag solution_tag_from_string(const std::string& s) {
  for (auto t : {SolutionTag::RealPositive, SolutionTag::RealMixedSign, SolutionTag::Complex})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown solution tag: " + s);
}

SolutionTag classify_point(const ComplexPoint& t, double tol) {
  ComplexPoint full = t;
  full.push_back(Complex(1.0));
  std::size_t big = 0;
  for (std::size_t i = 1; i < full.size(); ++i)
    if (std::abs(full[i]) > std::abs(full[big])) big = i;
  const Complex phase = full[big] / std::abs(full[big]);
  bool real = true, positive = true;
  for (auto& z : full) {
    z /= phase;
    real = real && std::abs(z.imag()) < tol;
  }
  if (!real) return SolutionTag::Complex;
  // Overall sign is free; count positivity with the sign that makes t6 positive.
  const double sign = full.back().real() < 0 ? -1.0 : 1.0;
  for (const auto& z : full) positive = positive && sign * z.real() > 0;
  return positive ? SolutionTag::RealPositive : SolutionTag::RealMixedSign;
}

SolutionSet classify_solutions(SolutionSet ss) {
  for (auto& s : ss.points) s.tag = classify_point(s.t);
  return ss;
}

std::vector<ComplexPoint> start_solutions(const std::vector<int>& degrees) {
  std::vector<ComplexPoint> out{ComplexPoint{}};
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("start degree must be positive");
    std::vector<ComplexPoint> next;
    for (const auto& prefix : out) {
      for (int k = 0; k < d; ++k) {
        ComplexPoint p = prefix;
        p.push_back(std::polar(1.0, 2.0 * M_PI * k / d));
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

ComplexPoint homogeneous_point(const ComplexPoint& t) {
  ComplexPoint full = t;
  full.push_back(Complex(1.0));
  return full;
}

double relative_distance(const ComplexPoint& a, const ComplexPoint& b) {
  double diff = 0.0, size = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    size = std::max(size, std::abs(a[i]));
  }
  return diff / size;
}

int find_solution(const SolutionSet& set, const ComplexPoint& p, double tol) {
  for (std::size_t i = 0; i < set.points.size(); ++i)
    if (relative_distance(set.points[i].t, p) < tol) return static_cast<int>(i);
  return -1;
}

namespace detail {

std::vector<CompiledPolynomial> compile_cleared(const ClearedSystem& cs) {
  std::vector<CompiledPolynomial> out;
  for (const auto& eq : cs.equations) out.emplace_back(eq, max_coefficient(eq));
  return out;
}

void finalize_candidates(const ClearedSystem& cs, const std::vector<std::optional<ComplexPoint>>& candidates,
                         const SolverOptions& options, SolutionSet& out) {
  const auto eqs = compile_cleared(cs);
  const auto ricci = ricci_components(cs.params);
  const auto sys = einstein_system(cs.params);

  struct Checked {
    bool torus = false;
    bool accepted = false;
    bool residual_reject = false;
    bool ill = false;
    Solution sol;
  };
  auto check_all = [&](const std::vector<std::optional<ComplexPoint>>& points) {
    std::vector<Checked> checked(points.size());
    parallel_for(
        points.size(),
        [&](std::size_t k) {
          if (!points[k]) return;
          auto refined = refine(eqs, *points[k]);
          if (!refined) return;
          Checked c;
          c.torus = std::all_of(refined->begin(), refined->end(),
                                [&](const Complex& z) { return std::abs(z) > options.torus_threshold; }) &&
                    std::all_of(refined->begin(), refined->end(),
                                [](const Complex& z) { return std::isfinite(std::abs(z)); });
          if (!c.torus) return;
          c.sol.t = *refined;
          const ComplexPoint full = homogeneous_point(c.sol.t);
          c.sol.residual = std::max(residual(ricci, full), static_cast<double>(residual_extended(ricci, full)));
          c.sol.condition = log_condition(sys, c.sol.t);
          c.residual_reject = !(c.sol.residual < options.tol_residual);
          c.ill = !(c.sol.condition < options.condition_limit);
          c.accepted = !c.residual_reject && !c.ill;
          checked[k] = std::move(c);
        },
        options.threads);
    return checked;
  };

  std::vector<int> hits;
  for (const auto& c : check_all(candidates)) {
    if (!c.torus) continue;
    if (c.residual_reject) {
      ++out.residual_rejects;
      continue;
    }
    if (c.ill) {
      ++out.ill_conditioned;
      continue;
    }
    const int idx = find_solution(out, c.sol.t, options.tol_dedup);
    if (idx >= 0) {
      if (hits[static_cast<std::size_t>(idx)]++ == 1) ++out.repeated_endpoints;
      continue;
    }
    out.points.push_back(c.sol);
    hits.push_back(1);
  }

  // Close the set under complex conjugation and the exchange of t3 and t4.
  for (std::size_t done = 0; done < out.points.size();) {
    std::vector<std::optional<ComplexPoint>> images;
    for (const std::size_t end = out.points.size(); done < end; ++done) {
      ComplexPoint conj = out.points[done].t, swapped = out.points[done].t;
      for (auto& z : conj) z = std::conj(z);
      std::swap(swapped[2], swapped[3]);
      for (auto& image : {conj, swapped})
        if (find_solution(out, image, options.tol_dedup) < 0) images.emplace_back(image);
    }
    for (const auto& c : check_all(images))
      if (c.accepted && find_solution(out, c.sol.t, options.tol_dedup) < 0) out.points.push_back(c.sol);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const Solution& a, const Solution& b) { return lexicographically_less(a.t, b.t); });
  out = classify_solutions(std::move(out));
}

}  // namespace detail

SolutionSet multistart_solve(const ClearedSystem& cs, const SolverOptions& options) {
  if (options.starts < 1) throw std::invalid_argument("at least one start is required");
  SolutionSet out;
  out.params = cs.params;
  out.method = "multistart";
  out.seed = options.seed;
  out.attempts = options.starts;

  const auto eqs = detail::compile_cleared(cs);
  int max_exp = 0;
  for (const auto& e : eqs) max_exp = std::max(max_exp, e.max_exponent);
  const int n = static_cast<int>(kUnknowns);

  std::vector<std::optional<ComplexPoint>> candidates(static_cast<std::size_t>(options.starts));
  parallel_for(
      candidates.size(),
      [&](std::size_t s) {
        std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + s);
        std::normal_distribution<double> log_modulus(0.0, 1.0);
        std::uniform_real_distribution<double> angle(-M_PI, M_PI);
        std::vector<Complex> x(kUnknowns);
        for (auto& z : x) z = std::polar(std::exp(log_modulus(rng)), angle(rng));
        std::vector<std::vector<Complex>> pw;
        std::vector<Complex> jac(static_cast<std::size_t>(n * n)), rhs(static_cast<std::size_t>(n));
        for (int it = 0; it < 80; ++it) {
          detail::fill_powers(x, max_exp, pw);
          for (int i = 0; i < n; ++i)
            rhs[i] = -detail::evaluate_with_gradient(eqs[static_cast<std::size_t>(i)], pw,
                                                     &jac[static_cast<std::size_t>(i * n)]);
          if (!detail::solve_dense(jac, rhs, n)) return;
          double ratio = 0.0, step = 0.0, size = 1.0;
          for (int i = 0; i < n; ++i) {
            ratio = std::max(ratio, std::abs(rhs[i]) / std::max(std::abs(x[i]), 0.1));
            step = std::max(step, std::abs(rhs[i]));
          }
          const double damp = ratio > 0.5 ? 0.5 / ratio : 1.0;
          for (int i = 0; i < n; ++i) {
            x[i] += damp * rhs[i];
            size = std::max(size, std::abs(x[i]));
          }
          if (!std::isfinite(size) || size > 1e8) return;
          if (damp == 1.0 && step < 1e-12 * size) {
            candidates[s] = ComplexPoint(x.begin(), x.end());
            return;
          }
        }
      },
      options.threads);
  detail::finalize_candidates(cs, candidates, options, out);
  return out;
}

}  // namespace flagbkk
