#include "flagbkk/contraction.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "flagbkk/curvature.hpp"
#include "flagbkk/parallel.hpp"

namespace flagbkk {

ContractionModel contract(const FlagParams& params, const FaceDescriptor& face) {
  const auto& geo = bc2_geometry();
  if (face.points == 0 || face.dim >= static_cast<int>(kSummands) - 1 || !find_face(geo.lattice, face.points))
    throw std::invalid_argument("not a proper face of the polytope");
  ContractionModel m;
  m.params = params;
  m.face = face;
  m.curvature = face_restriction(scaled_scalar_curvature(params), face.normal);
  for (const auto& o : geo.census.orbits)
    for (const auto& member : o.members)
      if (member.points == face.points) m.face_id = member.id;
  return m;
}

ContractionModel contract(const FlagParams& params, const std::string& face_id) {
  const auto& geo = bc2_geometry();
  const auto member = find_member(geo.census, face_id);
  if (!member) throw std::invalid_argument("unknown face id: " + face_id);
  return contract(params, *find_face(geo.lattice, member->points));
}

FlatnessCheck is_ricci_flat(const ContractionModel& model, const ComplexPoint& t, double tol) {
  if (t.size() != kSummands) throw std::invalid_argument("expected six coordinates");
  for (const auto& z : t)
    if (z == Complex(0.0)) throw std::invalid_argument("zero coordinate");
  Complex value(0.0);
  std::array<Complex, kSummands> log_gradient{};
  double magnitude = 0.0;
  for (const auto& [e, c] : model.curvature.terms()) {
    Complex term = c.get_d();
    for (std::size_t v = 0; v < kSummands; ++v) term *= std::pow(t[v], e[v]);
    value += term;
    magnitude += std::abs(term);
    for (std::size_t v = 0; v < kSummands; ++v) log_gradient[v] += static_cast<double>(e[v]) * term;
  }
  FlatnessCheck out;
  if (magnitude == 0.0) return out;
  double worst = std::abs(value);
  for (const auto& g : log_gradient) worst = std::max(worst, std::abs(g));
  out.residual = worst / magnitude;
  out.flat = out.residual < tol;
  return out;
}

bool is_ricci_flat_exact(const ContractionModel& model, const std::vector<Rational>& t) {
  if (t.size() != kSummands) throw std::invalid_argument("expected six coordinates");
  for (const auto& x : t)
    if (x == 0) throw std::invalid_argument("zero coordinate");
  if (model.curvature.is_zero()) return false;
  if (evaluate_exact(model.curvature, t) != 0) return false;
  for (std::size_t v = 0; v < kSummands; ++v)
    if (evaluate_exact(differentiate(model.curvature, v), t) != 0) return false;
  return true;
}

std::string to_string(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::G1_11: return "G1_11";
    case FamilyVariant::G1_12: return "G1_12";
    case FamilyVariant::G1_21: return "G1_21";
    case FamilyVariant::G1_22: return "G1_22";
  }
  return "G1_11";
}

const std::vector<FamilyVariant>& all_family_variants() {
  static const std::vector<FamilyVariant> all{FamilyVariant::G1_11, FamilyVariant::G1_12, FamilyVariant::G1_21,
                                              FamilyVariant::G1_22};
  return all;
}

FamilyVariant family_variant_from_string(const std::string& s) {
  for (auto v : all_family_variants())
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown family variant: " + s);
}

namespace {

bool first_pair(FamilyVariant v) { return v == FamilyVariant::G1_11 || v == FamilyVariant::G1_12; }

Metric family_formula(const FlagParams& p, FamilyVariant variant, const Rational& t1, const Rational& t2,
                      const Rational& t3) {
  Metric g{t1, t2, t3, 0, 0, -1};
  switch (variant) {
    case FamilyVariant::G1_11: {
      const Rational k(p.n2 - 1, 2 * p.n1);
      g[3] = k * k * t2 * t2 * t3;
      g[4] = k * t2 * t3;
      break;
    }
    case FamilyVariant::G1_12: {
      const Rational k(2 * p.n1, p.n2 - 1);
      g[3] = k * k * t3 / (t2 * t2);
      g[4] = k * t3 / t2;
      break;
    }
    case FamilyVariant::G1_21: {
      const Rational k(p.n1 - 1, 2 * p.n2);
      g[3] = 1 / t3;
      g[4] = k * t1 * t3;
      break;
    }
    case FamilyVariant::G1_22: {
      const Rational k(p.n1 - 1, 2 * p.n2);
      g[3] = 1 / t3;
      g[4] = k * t1 / t3;
      break;
    }
  }
  for (auto& x : g) x.canonicalize();
  return g;
}

}  // namespace

Rational family_certificate(const FlagParams& params, FamilyVariant variant) {
  return closed_form_tests(params).at(first_pair(variant) ? "G1_1x" : "G1_2x");
}

Rational stated_family_condition(const FlagParams& params, FamilyVariant variant) {
  const int ni = first_pair(variant) ? params.n1 : params.n2;
  const int nj = first_pair(variant) ? params.n2 : params.n1;
  return Rational(8 * ni * (2 * params.n3 + 1) - (nj - 1) * (nj - 1));
}

Metric ricci_flat_family(const FlagParams& params, FamilyVariant variant, const Rational& t1, const Rational& t2,
                         const Rational& t3) {
  if (t1 <= 0 || t2 <= 0 || t3 <= 0) throw std::invalid_argument("family parameters must be positive");
  const Rational cert = family_certificate(params, variant);
  if (cert != 0)
    throw std::domain_error("no Ricci-flat family on " + to_string(variant) + " at " + to_string(params) +
                            ": certificate " + rational_to_string(cert));
  return family_formula(params, variant, t1, t2, t3);
}

FamilyVerification verify_family(const FlagParams& params, FamilyVariant variant, int samples, std::uint64_t seed) {
  FamilyVerification out;
  out.params = params;
  out.variant = variant;
  out.certificate = family_certificate(params, variant);
  out.stated_condition = stated_family_condition(params, variant);
  out.applicable = out.certificate == 0;
  out.samples = samples;
  const auto model = contract(params, to_string(variant));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> tenths(1, 100);
  out.lorentzian = true;
  for (int k = 0; k < samples; ++k) {
    const Rational t1(tenths(rng), 10), t2(tenths(rng), 10), t3(tenths(rng), 10);
    const Metric g = family_formula(params, variant, t1, t2, t3);
    for (std::size_t v = 0; v < kSummands; ++v)
      if ((v + 1 < kSummands) != (g[v] > 0)) out.lorentzian = false;
    if (is_ricci_flat_exact(model, std::vector<Rational>(g.begin(), g.end()))) ++out.flat_samples;
  }
  out.verified = out.applicable && out.flat_samples == samples && out.lorentzian;
  return out;
}

std::vector<DegenerateTriple> search_degenerate_parameters(int bound, unsigned threads) {
  if (bound < 2) throw std::invalid_argument("bound must be at least 2");
  std::vector<FlagParams> triples;
  for (int a = 2; a <= bound; ++a)
    for (int b = 2; b <= bound; ++b)
      for (int c = 2; c <= bound; ++c) triples.push_back({a, b, c});
  DiscriminantOptions options;
  options.probe = false;
  options.threads = 1;
  std::vector<std::vector<std::string>> firing(triples.size());
  parallel_for(
      triples.size(), [&](std::size_t i) { firing[i] = discriminant_report(triples[i], options).firing; }, threads);
  std::vector<DegenerateTriple> out;
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (!firing[i].empty()) out.push_back({triples[i], firing[i]});
  return out;
}

}  // namespace flagbkk
