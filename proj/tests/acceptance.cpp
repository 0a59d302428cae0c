#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "flagbkk/contraction.hpp"
#include "flagbkk/curvature.hpp"
#include "flagbkk/discriminant.hpp"
#include "flagbkk/solver.hpp"
#include "flagbkk/univariate.hpp"

using namespace flagbkk;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CensusMember& member(const std::string& id) {
  static std::vector<CensusMember> keep;
  const auto m = find_member(bc2_geometry().census, id);
  if (!m) throw std::out_of_range(id);
  keep.push_back(*m);
  return keep.back();
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<int> exp(-2, 2), count(1, 5);
  LaurentPolynomial p(arity);
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k) {
    ExponentVector e(arity);
    for (auto& x : e) x = exp(rng);
    p.add_term(e, random_rational(rng));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937& rng, std::size_t arity) {
  std::vector<Rational> t;
  for (std::size_t k = 0; k < arity; ++k) t.push_back(random_rational(rng));
  return t;
}

void polytope_volume(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto support = bc2_support();
  const auto polytope = build_polytope(support);
  const BigInt volume = normalized_volume(polytope);
  const double elapsed = seconds_since(start);
  o.detail << "points " << support.size() << ", ν = " << volume.get_str();
  for (auto strategy : {VolumeStrategy::PullLastVertex, VolumeStrategy::CentroidCone}) {
    const BigInt other = normalized_volume(polytope, strategy);
    o.require(other == volume, "triangulations disagree: " + other.get_str());
  }
  o.detail << ", three triangulations agree, " << elapsed << " s";
  o.require(support.size() == 20, "support size");
  o.require(volume == 132, "volume");
  o.require(elapsed < 10.0, "runtime");
}

void census(Outcome& o) {
  const auto& geo = bc2_geometry();
  const auto& table = marked_face_table();
  const auto& orbits = geo.census.orbits;
  o.require(orbits.size() == 13, "orbit count");
  o.require(geo.census.total_faces() == 27, "marked face total");
  const std::vector<int> dims{2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4};
  const std::vector<int> sizes{4, 1, 2, 2, 2, 1, 4, 2, 2, 2, 2, 2, 1};
  for (std::size_t k = 0; k < orbits.size() && k < table.size(); ++k) {
    const auto& orbit = orbits[k];
    const auto& row = table[k];
    const std::string label = "Γ" + std::to_string(row.label);
    o.require(orbit.label == row.label, label + " label");
    o.require(orbit.dim == dims[k] && row.dim == dims[k], label + " dimension");
    o.require(static_cast<int>(orbit.members.size()) == sizes[k] && row.orbit_size == sizes[k], label + " size");
    // The tabulated normal selects one member of the orbit, up to the symmetry group.
    const PointMask selected = argmax_face(geo.polytope, row.normal);
    bool found = false;
    for (const auto& m : orbit.members) found = found || m.points == selected;
    o.require(found, label + " normal");
  }
  o.detail << orbits.size() << " orbits, " << geo.census.total_faces() << " marked faces, " << geo.lattice.size()
           << " proper faces";
}

void dimension_identity(Outcome& o) {
  int checked = 0;
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b)
      for (int c = 2; c <= 12; ++c) {
        const long m = a + b + c;
        const long expected = m * (2 * m + 1) - a * a - b * b - c * (2L * c + 1);
        const long total = dimensions({a, b, c}).total();
        if (total != expected) o.require(false, to_string(FlagParams{a, b, c}));
        ++checked;
      }
  o.detail << checked << " triples";
  o.require(checked == 1331, "triple count");
}

void ricci_reconstruction(Outcome& o) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> n(2, 15);
  for (int k = 0; k < 10; ++k) {
    const FlagParams p{n(rng), n(rng), n(rng)};
    const auto r = ricci_components(p);
    const auto d = display_ricci(p);
    const auto dims = dimensions(p);
    LaurentPolynomial trace(kSummands);
    for (std::size_t i = 0; i < kSummands; ++i) {
      o.require(r.r[i] == d.r[i], "r" + std::to_string(i + 1) + " at " + to_string(p));
      trace += scale(r.r[i], dims.N[i]);
    }
    o.require(trace == scalar_curvature(p), "trace at " + to_string(p));
    o.detail << (k ? " " : "") << to_string(p);
  }
}

void degeneracy_certificates(Outcome& o) {
  DiscriminantOptions exact_only;
  exact_only.probe = false;
  const auto equal = discriminant_report({2, 2, 2}, exact_only);
  o.require(closed_form_tests({2, 2, 2}).at("G2") == 0, "(2,2,2) six-point identity");
  o.require(std::find(equal.firing.begin(), equal.firing.end(), "Γ2 n1=n2") != equal.firing.end(),
            "(2,2,2) fires n1=n2");

  const auto c = curvature_coefficients({2, 7, 4});
  o.require(c.b2() == 168 && c.b5() == 378 && c.b3() == 252, "(2,7,4) coefficients");
  const Rational det = parallelogram_determinant({2, 7, 4}, *find_face(bc2_geometry().lattice, member("G1_11").points));
  o.require(det == 0, "(2,7,4) determinant");
  const auto para = discriminant_report({2, 7, 4}, exact_only);
  o.require(para.firing == std::vector<std::string>{"Γ1 parallelogram"}, "(2,7,4) firing");

  const auto good = discriminant_report({2, 3, 2}, exact_only);
  o.require(good.certified && good.firing.empty(), "(2,3,2) fires nothing");
  for (const auto& f : good.faces) {
    if (f.orbit_label == 1 || f.orbit_label == 2 || f.orbit_label == 11 || f.orbit_label == 13)
      o.require(f.certificate != 0 && f.verdict == FaceVerdict::Nonsingular, f.face + " at (2,3,2)");
  }
  const auto res = resultant_certificates({2, 3, 2});
  o.require(res.gamma12_torus != 0, "(2,3,2) resultant");
  o.detail << "(2,2,2): " << equal.verdict << "; (2,7,4): 168·378 − 252² = " << 168 * 378 - 252 * 252
           << "; (2,3,2): " << good.verdict << "; resultant (2,3,2) has " << res.gamma12.get_str().size()
           << " digits, torus part " << res.gamma12_torus.get_str().size() << " digits";
}

void probe_equivalence(Outcome& o) {
  std::vector<FlagParams> params;
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 6; ++c) params.push_back({a, b, c});
  params.push_back({2, 7, 4});
  params.push_back({7, 2, 4});
  int faces = 0, singular = 0, mismatches = 0;
  double worst = 0.0;
  for (const auto& p : params) {
    const auto report = discriminant_report(p);
    for (const auto& f : report.faces) {
      ++faces;
      const bool exact_zero = f.verdict == FaceVerdict::Singular;
      singular += exact_zero;
      if (f.witness.has_value() != exact_zero) {
        ++mismatches;
        o.require(false, f.face + " at " + to_string(p));
      }
      if (f.witness) worst = std::max(worst, f.witness->residual);
    }
  }
  o.require(worst < 1e-10, "witness residual");

  const FlagParams equal{2, 2, 2};
  const auto c = curvature_coefficients(equal);
  const auto w = numeric_singularity_probe(truncated_system(equal, member("G2").points));
  o.require(w.has_value(), "six-point witness");
  if (w) {
    const Complex x = w->torus[2] / w->torus[3], y = w->torus[0] / w->torus[1];
    const double a2 = c.a2().get_d(), b1 = c.b1().get_d(), b2 = c.b2().get_d();
    const Complex disc = std::sqrt(Complex(a2 * a2 - 4 * b2 * b2));
    const double gap = std::min(std::abs(x - (a2 + disc) / (2 * b2)), std::abs(x - (a2 - disc) / (2 * b2)));
    o.require(gap < 1e-8 && std::abs(y + b1 / b2) < 1e-8, "six-point witness position");
    o.detail << "; six-point witness off the closed form by " << std::max(gap, std::abs(y + b1 / b2));
  }
  std::ostringstream head;
  head << params.size() << " triples, " << faces << " faces, " << singular << " singular, " << mismatches
       << " mismatches, worst witness residual " << worst;
  o.detail.str(head.str() + o.detail.str());
}

void ricci_flat_families(Outcome& o) {
  int verified = 0;
  for (const FlagParams& p : {FlagParams{2, 7, 4}, FlagParams{7, 2, 4}}) {
    for (auto v : all_family_variants()) {
      if (family_certificate(p, v) != 0) continue;
      const auto r = verify_family(p, v, 100, 1);
      o.require(r.flat_samples == 100, to_string(v) + " flatness at " + to_string(p));
      o.require(r.lorentzian, to_string(v) + " signature at " + to_string(p));
      verified += r.verified;
      o.detail << to_string(v) << "@" << to_string(p) << " " << r.flat_samples << "/100 ";
    }
  }
  o.require(verified == 4, "applicable variants");
  o.detail << "exact, signature (+,+,+,+,+,−)";
}

void solver_soundness(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto cs = clear_denominators(einstein_system({2, 3, 2}));
  auto check = [&](const SolutionSet& s) {
    o.require(s.points.size() <= 132, s.method + " count");
    for (const auto& p : s.points) {
      if (!(p.residual < 1e-10)) o.require(false, s.method + " residual");
      ComplexPoint conj = p.t, swapped = p.t;
      for (auto& z : conj) z = std::conj(z);
      std::swap(swapped[2], swapped[3]);
      if (find_solution(s, conj, 1e-6) < 0) o.require(false, s.method + " conjugation closure");
      if (find_solution(s, swapped, 1e-6) < 0) o.require(false, s.method + " t3/t4 closure");
    }
  };
  auto same = [](const SolutionSet& a, const SolutionSet& b) {
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t k = 0; k < a.points.size(); ++k)
      if (a.points[k].t != b.points[k].t) return false;
    return true;
  };
  SolverOptions options;
  options.seed = 7;
  const auto multi = multistart_solve(cs, options);
  check(multi);
  o.require(same(multi, multistart_solve(cs, options)), "multistart determinism");

  const auto homotopy = homotopy_solve(cs, options);
  check(homotopy);
  o.require(same(homotopy, homotopy_solve(cs, options)), "homotopy determinism");
  if (homotopy.path_failures == 0) o.require(homotopy.points.size() == 132, "homotopy count with no failures");
  for (const auto& p : multi.points)
    if (find_solution(homotopy, p.t, 1e-6) < 0) o.require(false, "multistart point missing from homotopy");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 600.0, "runtime");
  o.detail << "multistart " << multi.points.size() << " solutions; homotopy " << homotopy.points.size()
           << " solutions from " << homotopy.attempts << " paths, " << homotopy.path_failures << " failures, "
           << homotopy.singular_endpoints << " singular endpoints; " << elapsed << " s";
}

void property_suite(Outcome& o) {
  std::mt19937 rng(99);
  int laws = 0;
  for (int k = 0; k < 60; ++k) {
    const auto p = random_laurent(rng, 3), q = random_laurent(rng, 3), r = random_laurent(rng, 3);
    o.require((p * q) * r == p * (q * r), "associativity");
    o.require(p * (q + r) == p * q + p * r, "distributivity");
    o.require(p * q == q * p && p + q == q + p, "commutativity");
    o.require(p - p == LaurentPolynomial(3), "additive inverse");
    for (std::size_t v = 0; v < 3; ++v)
      o.require(differentiate(p * q, v) == differentiate(p, v) * q + p * differentiate(q, v), "Leibniz rule");
    const auto t = random_point(rng, 3);
    o.require(evaluate_exact(p * q, t) == evaluate_exact(p, t) * evaluate_exact(q, t), "evaluation homomorphism");
    laws += 6;
  }

  int restrictions = 0;
  const auto s = scaled_scalar_curvature({3, 4, 2});
  for (const auto& f : bc2_geometry().lattice) {
    const auto once = face_restriction(s, f.normal);
    o.require(face_restriction(once, f.normal) == once, "face restriction idempotence");
    ++restrictions;
  }
  for (int k = 0; k < 40; ++k) {
    const auto p = random_laurent(rng, 3);
    std::uniform_int_distribution<int> w(-3, 3);
    const std::vector<int> normal{w(rng), w(rng), w(rng)};
    const auto once = face_restriction(p, normal);
    o.require(face_restriction(once, normal) == once, "random face restriction idempotence");
    ++restrictions;
  }

  int resultants = 0;
  std::uniform_int_distribution<int> coeff(-6, 6), degree(1, 5);
  for (int k = 0; k < 40; ++k) {
    auto poly = [&]() {
      std::vector<BigInt> c(static_cast<std::size_t>(degree(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      return UnivariatePolynomial(c);
    };
    const auto f = poly(), g = poly();
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    o.require(sylvester_resultant(f, g) == sign * sylvester_resultant(g, f), "resultant antisymmetry");
    ++resultants;
  }

  int homogeneity = 0;
  std::uniform_int_distribution<int> n(2, 9);
  for (int k = 0; k < 20; ++k) {
    const FlagParams p{n(rng), n(rng), n(rng)};
    const auto sc = scalar_curvature(p);
    std::vector<Rational> t = random_point(rng, kSummands), scaled;
    Rational lambda = random_rational(rng);
    for (auto& x : t) x = abs(x);
    lambda = abs(lambda);
    for (const auto& x : t) scaled.push_back(lambda * x);
    o.require(evaluate_exact(sc, scaled) == evaluate_exact(sc, t) / lambda, "homogeneity at " + to_string(p));
    ++homogeneity;
  }
  o.detail << laws << " ring and Leibniz samples, " << restrictions << " restrictions, " << resultants
           << " resultant pairs, " << homogeneity << " homogeneity samples";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"polytope volume", polytope_volume},
      {"marked-face census", census},
      {"dimension identity", dimension_identity},
      {"Ricci reconstruction", ricci_reconstruction},
      {"degeneracy certificates", degeneracy_certificates},
      {"probe-certificate equivalence", probe_equivalence},
      {"Ricci-flat families", ricci_flat_families},
      {"solver soundness", solver_soundness},
      {"property suite", property_suite},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
