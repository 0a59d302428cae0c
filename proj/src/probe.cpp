#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "flagbkk/discriminant.hpp"

namespace flagbkk {

namespace {

using IntRow = std::vector<long>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Integer row echelon basis of the lattice spanned by `rows`.
std::vector<IntRow> lattice_basis(std::vector<IntRow> rows, std::vector<std::size_t>& pivots) {
  pivots.clear();
  std::size_t top = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || std::labs(rows[r][col]) < std::labs(rows[best][col])))
          best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const long q = rows[r][col] / rows[top][col];
        for (std::size_t k = 0; k < width; ++k) rows[r][k] -= q * rows[top][k];
        clean = clean && rows[r][col] == 0;
      }
      if (clean) {
        pivots.push_back(col);
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

struct LocalChart {
  std::vector<IntRow> basis;
  /// Local exponents of each term, one row per term.
  std::vector<std::vector<double>> exponents;
  std::vector<Complex> coefficients;
};

LocalChart local_chart(const TruncatedSystem& ts) {
  LocalChart chart;
  std::vector<IntRow> diffs;
  for (const auto& [e, c] : ts.poly.terms()) diffs.emplace_back(e.begin(), e.end());
  std::vector<std::size_t> pivots;
  chart.basis = lattice_basis(diffs, pivots);
  for (const auto& [e, c] : ts.poly.terms()) {
    std::vector<double> lambda(chart.basis.size());
    std::vector<long> rest(e.begin(), e.end());
    for (std::size_t r = 0; r < chart.basis.size(); ++r) {
      const long piv = chart.basis[r][pivots[r]];
      if (rest[pivots[r]] % piv != 0) throw std::logic_error("exponent outside the face lattice");
      const long m = rest[pivots[r]] / piv;
      lambda[r] = static_cast<double>(m);
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= m * chart.basis[r][k];
    }
    for (long x : rest)
      if (x != 0) throw std::logic_error("exponent outside the face lattice");
    chart.exponents.push_back(std::move(lambda));
    chart.coefficients.emplace_back(c.get_d());
  }
  return chart;
}

ComplexPoint torus_point(const LocalChart& chart, const CVector& z) {
  const std::size_t k = chart.basis.size();
  Eigen::MatrixXd w(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(kSummands));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < kSummands; ++c) w(r, c) = static_cast<double>(chart.basis[r][c]);
  const Eigen::MatrixXd gram_inv = (w * w.transpose()).inverse();
  const CVector log_t = w.transpose().cast<Complex>() * (gram_inv.cast<Complex>() * z);
  ComplexPoint t(kSummands);
  for (std::size_t i = 0; i < kSummands; ++i) t[i] = std::exp(log_t(static_cast<Eigen::Index>(i)));
  return t;
}

}  // namespace

double singularity_residual(const TruncatedSystem& ts, const ComplexPoint& t) {
  Complex value(0.0);
  std::vector<Complex> grad(kSummands, Complex(0.0));
  double scale = 0.0;
  for (const auto& [e, c] : ts.poly.terms()) {
    const LaurentPolynomial mono = LaurentPolynomial::monomial(e, c);
    const Complex term = evaluate(mono, t);
    value += term;
    scale += std::abs(term);
    for (std::size_t i = 0; i < kSummands; ++i) grad[i] += static_cast<double>(e[i]) * term;
  }
  if (scale == 0.0) return 0.0;
  double worst = std::abs(value);
  for (const auto& g : grad) worst = std::max(worst, std::abs(g));
  return worst / scale;
}

std::optional<ProbeWitness> numeric_singularity_probe(const TruncatedSystem& ts, const ProbeBudget& budget) {
  if (ts.poly.size() <= 1) return std::nullopt;
  const LocalChart chart = local_chart(ts);
  const auto k = static_cast<Eigen::Index>(chart.basis.size());
  const std::size_t terms = chart.coefficients.size();
  std::mt19937_64 rng(budget.seed);
  std::normal_distribution<double> radial(0.0, 1.5);
  std::uniform_real_distribution<double> angular(-M_PI, M_PI);

  std::vector<Complex> weighted(terms);
  auto evaluate_terms = [&](const CVector& z) {
    for (std::size_t p = 0; p < terms; ++p) {
      Complex s(0.0);
      for (Eigen::Index j = 0; j < k; ++j) s += chart.exponents[p][static_cast<std::size_t>(j)] * z(j);
      weighted[p] = chart.coefficients[p] * std::exp(s);
    }
  };

  for (int start = 0; start < budget.starts; ++start) {
    CVector z(k);
    for (Eigen::Index j = 0; j < k; ++j) z(j) = Complex(radial(rng), angular(rng));
    bool converged = false;
    for (int it = 0; it < budget.max_iterations; ++it) {
      evaluate_terms(z);
      CVector g = CVector::Zero(k);
      CMatrix h = CMatrix::Zero(k, k);
      for (std::size_t p = 0; p < terms; ++p) {
        const auto& lam = chart.exponents[p];
        for (Eigen::Index a = 0; a < k; ++a) {
          g(a) += weighted[p] * lam[static_cast<std::size_t>(a)];
          for (Eigen::Index b = 0; b < k; ++b)
            h(a, b) += weighted[p] * lam[static_cast<std::size_t>(a)] * lam[static_cast<std::size_t>(b)];
        }
      }
      Eigen::FullPivLU<CMatrix> lu(h);
      if (!lu.isInvertible()) break;
      CVector dz = lu.solve(-g);
      if (!dz.allFinite()) break;
      const double step = dz.cwiseAbs().maxCoeff();
      if (step > 2.0) dz *= 2.0 / step;
      z += dz;
      if (z.real().cwiseAbs().maxCoeff() > 40.0) break;
      if (step < 1e-13 * std::max(1.0, z.cwiseAbs().maxCoeff())) {
        converged = true;
        break;
      }
    }
    if (!converged) continue;
    ComplexPoint t = torus_point(chart, z);
    const double res = singularity_residual(ts, t);
    if (res < 1e-10) {
      ProbeWitness w;
      w.torus = std::move(t);
      w.local.assign(z.data(), z.data() + z.size());
      w.residual = res;
      w.starts_used = start + 1;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace flagbkk
