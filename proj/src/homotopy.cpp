#include <cmath>
#include <random>

#include "flagbkk/parallel.hpp"
#include "flagbkk/solver.hpp"
#include "solver_internal.hpp"

namespace flagbkk {

namespace {

constexpr int kUnknowns = static_cast<int>(kSummands) - 1;
constexpr int kProjective = kUnknowns + 1;
/// Start-system weight below which a stalled path counts as a singular endpoint.
constexpr double kEndgameWindow = 1e-6;
/// Start-system weight at which tracking stops.
constexpr double kSigmaEnd = 1e-22;
/// In the endgame each step reduces the start-system weight by at most this fraction.
constexpr double kEndgameRatio = 0.5;

/// Coordinate scales for componentwise step measurement.
std::vector<double> coordinate_scales(const std::vector<Complex>& x) {
  double size = 0.0;
  for (const auto& z : x) size = std::max(size, std::abs(z));
  std::vector<double> c(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) c[v] = std::abs(x[v]) + 1e-10 * size + 1e-300;
  return c;
}

/// Solves hx * dx = rhs with columns scaled by `c` and rows equilibrated.
bool solve_scaled(std::vector<Complex> hx, std::vector<Complex>& rhs, const std::vector<double>& c) {
  const int n = static_cast<int>(c.size());
  for (int r = 0; r < n; ++r) {
    double row = 0.0;
    for (int v = 0; v < n; ++v) {
      hx[static_cast<std::size_t>(r * n + v)] *= c[static_cast<std::size_t>(v)];
      row = std::max(row, std::abs(hx[static_cast<std::size_t>(r * n + v)]));
    }
    if (row == 0.0) return false;
    for (int v = 0; v < n; ++v) hx[static_cast<std::size_t>(r * n + v)] /= row;
    rhs[static_cast<std::size_t>(r)] /= row;
  }
  if (!detail::solve_dense(std::move(hx), rhs, n)) return false;
  for (int v = 0; v < n; ++v) rhs[static_cast<std::size_t>(v)] *= c[static_cast<std::size_t>(v)];
  return true;
}

/// max_v |dx_v| / c_v.
double relative_size(const std::vector<Complex>& dx, const std::vector<double>& c) {
  double m = 0.0;
  for (std::size_t v = 0; v < dx.size(); ++v) m = std::max(m, std::abs(dx[v]) / c[v]);
  return m;
}

/// sigma gamma G + (1 - sigma) F on the patch <patch, X> = 1, with X = (x0, x1..x5).
struct Homotopy {
  std::vector<detail::CompiledPolynomial> target;  // homogenized, 6 variables
  std::vector<int> degrees;
  Complex gamma;
  std::vector<Complex> patch;
  int max_exponent = 0;

  /// Fills H (size 6) and optionally dH/dX (row-major 6x6) and dH/dsigma (size 6).
  void evaluate(const std::vector<Complex>& x, double sigma, Complex* h, Complex* hx, Complex* hs) const {
    std::vector<std::vector<Complex>> pw;
    detail::fill_powers(x, max_exponent, pw);
    Complex grad[kProjective];
    for (int i = 0; i < kUnknowns; ++i) {
      const Complex f = detail::evaluate_with_gradient(target[static_cast<std::size_t>(i)], pw, grad);
      const int d = degrees[static_cast<std::size_t>(i)];
      const Complex g = pw[static_cast<std::size_t>(i + 1)][d] - pw[0][d];
      h[i] = sigma * gamma * g + (1.0 - sigma) * f;
      if (hs) hs[i] = gamma * g - f;
      if (hx) {
        for (int v = 0; v < kProjective; ++v) hx[i * kProjective + v] = (1.0 - sigma) * grad[v];
        hx[i * kProjective + 0] -= sigma * gamma * static_cast<double>(d) * pw[0][d - 1];
        hx[i * kProjective + i + 1] +=
            sigma * gamma * static_cast<double>(d) * pw[static_cast<std::size_t>(i + 1)][d - 1];
      }
    }
    Complex lin(0.0);
    for (int v = 0; v < kProjective; ++v) lin += patch[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
    h[kUnknowns] = lin - 1.0;
    if (hs) hs[kUnknowns] = 0.0;
    if (hx)
      for (int v = 0; v < kProjective; ++v) hx[kUnknowns * kProjective + v] = patch[static_cast<std::size_t>(v)];
  }

  /// dX/dsigma = -H_X^{-1} H_sigma.
  bool velocity(const std::vector<Complex>& x, double sigma, std::vector<Complex>& out) const {
    Complex h[kProjective], hs[kProjective];
    std::vector<Complex> hx(kProjective * kProjective);
    evaluate(x, sigma, h, hx.data(), hs);
    out.assign(hs, hs + kProjective);
    for (auto& z : out) z = -z;
    return solve_scaled(std::move(hx), out, coordinate_scales(x));
  }

  /// Newton at fixed sigma until the componentwise relative correction is below `tol`.
  bool correct(std::vector<Complex>& x, double sigma, int iterations, double tol) const {
    Complex h[kProjective];
    std::vector<Complex> hx(kProjective * kProjective);
    double previous = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iterations; ++it) {
      evaluate(x, sigma, h, hx.data(), nullptr);
      std::vector<Complex> dx(h, h + kProjective);
      for (auto& z : dx) z = -z;
      const auto c = coordinate_scales(x);
      if (!solve_scaled(hx, dx, c)) return false;
      const double step = relative_size(dx, c);
      if (!std::isfinite(step)) return false;
      for (int v = 0; v < kProjective; ++v) x[static_cast<std::size_t>(v)] += dx[static_cast<std::size_t>(v)];
      if (step <= tol) return true;
      if (it > 0 && step > 0.5 * previous) return false;
      previous = step;
    }
    return false;
  }
};

enum class PathEnd { Reached, Singular, Failed };

struct PathResult {
  PathEnd end = PathEnd::Failed;
  std::vector<Complex> x;
  double sigma = 1.0;
};

bool near_boundary(const std::vector<Complex>& x) {
  double size = 0.0, smallest = std::numeric_limits<double>::infinity();
  for (const auto& z : x) {
    size = std::max(size, std::abs(z));
    smallest = std::min(smallest, std::abs(z));
  }
  return smallest < 1e-12 * size;
}

/// RK4 predictor and Newton corrector from sigma = 1 towards sigma = 0, with
/// steps limited to a fixed fraction of sigma near the target.
PathResult track(const Homotopy& hom, std::vector<Complex> x) {
  constexpr double kMaxStep = 0.05;
  constexpr double kMaxMove = 0.1;
  PathResult r;
  double sigma = 1.0;
  double h = 0.01;
  int successes = 0;
  std::vector<Complex> k1, k2, k3, k4, y(kProjective), move(kProjective);
  auto combine = [&](const std::vector<Complex>& k, double w) {
    for (int v = 0; v < kProjective; ++v)
      y[static_cast<std::size_t>(v)] = x[static_cast<std::size_t>(v)] - w * k[static_cast<std::size_t>(v)];
  };
  for (int steps = 0; steps < 50000 && sigma > kSigmaEnd; ++steps) {
    const double step = std::min({h, kMaxStep, sigma < 0.1 ? kEndgameRatio * sigma : sigma});
    bool ok = hom.velocity(x, sigma, k1);
    if (ok) combine(k1, 0.5 * step);
    ok = ok && hom.velocity(y, sigma - 0.5 * step, k2);
    if (ok) combine(k2, 0.5 * step);
    ok = ok && hom.velocity(y, sigma - 0.5 * step, k3);
    if (ok) combine(k3, step);
    ok = ok && hom.velocity(y, sigma - step, k4);
    if (ok) {
      for (int v = 0; v < kProjective; ++v) {
        const auto u = static_cast<std::size_t>(v);
        y[u] = x[u] - step / 6.0 * (k1[u] + 2.0 * k2[u] + 2.0 * k3[u] + k4[u]);
        move[u] = y[u] - x[u];
      }
      ok = relative_size(move, coordinate_scales(x)) <= kMaxMove && hom.correct(y, sigma - step, 3, 1e-10);
    }
    if (ok) {
      x = y;
      sigma -= step;
      if (++successes >= 3) {
        h = 2.0 * step;
        successes = 0;
      } else {
        h = step;
      }
      if (sigma < kEndgameWindow && near_boundary(x)) {
        r.end = PathEnd::Singular;
        break;
      }
    } else {
      h = 0.5 * step;
      successes = 0;
      if (h < 1e-10 * sigma) {
        r.end = sigma < kEndgameWindow ? PathEnd::Singular : PathEnd::Failed;
        break;
      }
    }
  }
  if (sigma <= kSigmaEnd) r.end = hom.correct(x, 0.0, 8, 1e-13) ? PathEnd::Reached : PathEnd::Singular;
  r.sigma = sigma;
  r.x = std::move(x);
  return r;
}

}  // namespace

SolutionSet homotopy_solve(const ClearedSystem& cs, const SolverOptions& options) {
  SolutionSet out;
  out.params = cs.params;
  out.method = "homotopy";
  out.seed = options.seed;

  Homotopy hom;
  hom.degrees = cs.degrees;
  for (const auto& eq : cs.equations) {
    const int d = cs.degrees[hom.target.size()];
    LaurentPolynomial homog(kProjective);
    for (const auto& [e, c] : eq.terms()) {
      ExponentVector f(kProjective, 0);
      int total = 0;
      for (int v = 0; v < kUnknowns; ++v) {
        f[static_cast<std::size_t>(v + 1)] = e[static_cast<std::size_t>(v)];
        total += e[static_cast<std::size_t>(v)];
      }
      f[0] = d - total;
      homog.add_term(f, c);
    }
    hom.target.emplace_back(homog, detail::max_coefficient(homog));
    hom.max_exponent = std::max(hom.max_exponent, d);
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::normal_distribution<double> gauss(0.0, 1.0);
  hom.gamma = std::polar(1.0, angle(rng));
  for (int v = 0; v < kProjective; ++v) hom.patch.emplace_back(gauss(rng), gauss(rng));

  const auto starts = start_solutions(cs.degrees);
  out.attempts = static_cast<int>(starts.size());
  std::vector<PathResult> results(starts.size());
  parallel_for(
      starts.size(),
      [&](std::size_t k) {
        std::vector<Complex> x(kProjective);
        x[0] = 1.0;
        for (int v = 0; v < kUnknowns; ++v) x[static_cast<std::size_t>(v + 1)] = starts[k][static_cast<std::size_t>(v)];
        Complex lin(0.0);
        for (int v = 0; v < kProjective; ++v) lin += hom.patch[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
        for (auto& z : x) z /= lin;
        results[k] = track(hom, std::move(x));
      },
      options.threads);

  std::vector<std::optional<ComplexPoint>> candidates(results.size());
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    if (r.end == PathEnd::Failed) {
      ++out.path_failures;
      continue;
    }
    if (r.end == PathEnd::Singular) ++out.singular_endpoints;
    double size = 0.0;
    for (const auto& z : r.x) size = std::max(size, std::abs(z));
    if (std::abs(r.x[0]) < 1e-8 * size) continue;  // endpoint at infinity
    ComplexPoint t(kUnknowns);
    for (int v = 0; v < kUnknowns; ++v) t[static_cast<std::size_t>(v)] = r.x[static_cast<std::size_t>(v + 1)] / r.x[0];
    candidates[k] = std::move(t);
  }
  detail::finalize_candidates(cs, candidates, options, out);
  return out;
}

}  // namespace flagbkk
