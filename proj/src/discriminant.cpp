#include "flagbkk/discriminant.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flagbkk/curvature.hpp"
#include "flagbkk/parallel.hpp"

namespace flagbkk {

const PolytopeGeometry& bc2_geometry() {
  static const PolytopeGeometry geometry = [] {
    PolytopeGeometry g;
    g.polytope = build_polytope(bc2_support());
    g.lattice = face_lattice(g.polytope);
    g.group = SymmetryGroup::bc2();
    g.census = marked_faces(g.polytope, g.lattice, g.group);
    g.volume = normalized_volume(g.polytope);
    return g;
  }();
  return geometry;
}

TruncatedSystem truncated_system(const FlagParams& params, const FaceDescriptor& face) {
  const auto& geo = bc2_geometry();
  const FaceDescriptor* known = find_face(geo.lattice, face.points);
  if (known == nullptr || known->dim >= geo.polytope.dim) {
    throw std::invalid_argument("not a proper face of the polytope");
  }
  TruncatedSystem ts;
  ts.face = *known;
  ExponentVector base;
  for (int v : known->vertices) {
    const auto& pt = geo.polytope.points[static_cast<std::size_t>(v)];
    if (base.empty() || pt < base) base = pt;
  }
  ts.base_vertex = base;
  ExponentVector neg(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) neg[i] = -base[i];
  ts.poly = shift(face_restriction(scaled_scalar_curvature(params), known->normal), neg);
  for (std::size_t i = 0; i < kSummands; ++i) {
    ExponentVector e(kSummands, 0);
    e[i] = 1;
    ts.gradient.push_back(shift(differentiate(ts.poly, i), e));
  }
  return ts;
}

TruncatedSystem truncated_system(const FlagParams& params, PointMask face) {
  const FaceDescriptor* fd = find_face(bc2_geometry().lattice, face);
  if (fd == nullptr) throw std::invalid_argument("not a face of the polytope");
  return truncated_system(params, *fd);
}

Rational parallelogram_determinant(const FlagParams& params, const FaceDescriptor& face) {
  if (face.klass != FaceClass::Parallelogram || popcount(face.points) != 4) {
    throw std::invalid_argument("face is not a four-point parallelogram");
  }
  const auto& pts = bc2_geometry().polytope.points;
  std::vector<ExponentVector> p;
  for (int k : mask_indices(face.points)) p.push_back(pts[static_cast<std::size_t>(k)]);
  std::sort(p.begin(), p.end());
  auto sum = [](const ExponentVector& x, const ExponentVector& y) {
    ExponentVector s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
    return s;
  };
  std::size_t partner = 0;
  for (std::size_t d = 1; d < 4; ++d) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < 4; ++k)
      if (k != d) rest.push_back(k);
    if (sum(p[0], p[d]) == sum(p[rest[0]], p[rest[1]])) partner = d;
  }
  if (partner == 0) throw std::invalid_argument("face is not a parallelogram");
  std::vector<std::size_t> rest;
  for (std::size_t k = 1; k < 4; ++k)
    if (k != partner) rest.push_back(k);
  const auto s = scaled_scalar_curvature(params);
  return s.coefficient(p[0]) * s.coefficient(p[partner]) -
         s.coefficient(p[rest[0]]) * s.coefficient(p[rest[1]]);
}

std::map<std::string, Rational> closed_form_tests(const FlagParams& params) {
  const auto c = curvature_coefficients(params);
  const auto m = curvature_coefficients(params.swapped());
  std::map<std::string, Rational> out;
  out["G2"] = Rational(c.a1() * c.b2() - c.a2() * c.b1());
  out["G1_1x"] = Rational(c.b2() * c.b5() - c.b3() * c.b3());
  out["G1_2x"] = Rational(c.b1() * c.b4() - c.b3() * c.b3());
  out["G11_12"] = Rational(gamma11_certificate(c));
  out["G11_21"] = Rational(gamma11_certificate(m));
  out["G13_branch"] = Rational(c.b1() * (c.a1() + 2 * c.b1()) - c.b2() * (c.a2() + 2 * c.b2()));
  out["G3_a1b1"] = Rational(c.a1() + 2 * c.b1());
  out["G3_a2b2"] = Rational(c.a2() + 2 * c.b2());
  for (const auto& [suffix, k] : {std::pair{"_12", &c}, std::pair{"_21", &m}}) {
    const auto& q = *k;
    out[std::string("G7") + suffix] = -Rational(q.b2() * q.b4()) / Rational(q.b1() * q.b5());
    out[std::string("G9_lhs") + suffix] =
        Rational(4 * (q.b3() * q.b3() - q.b2() * q.b5()) * (q.a2() + 2 * q.b2()));
    out[std::string("G9_rhs") + suffix] = Rational(q.a5() * q.a5() * q.b2());
    out[std::string("G10") + suffix] = Rational(q.a5());
  }
  return out;
}

Gamma12Polynomials build_gamma12_polynomials(const FlagParams& params) {
  const auto c = curvature_coefficients(params);
  const BigInt &a3 = c.a3(), &b1 = c.b1(), &b2 = c.b2(), &b3 = c.b3(), &b4 = c.b4(), &b5 = c.b5();
  const BigInt a3s = a3 * a3;
  const BigInt d = b3 * b3 - b1 * b4;
  const BigInt b5p3 = b5 * b5 * b5;
  Gamma12Polynomials g;
  g.p1 = UnivariatePolynomial({
      b2 * b3 * b4 * d,
      2 * b2 * b4 * b5 * d,
      b3 * (b1 * b2 * b3 * b3 + b1 * b3 * b3 * b5 - b1 * b4 * b4 * b5 - b2 * b3 * b3 * b4 +
            b2 * b4 * b5 * b5),
      b3 * b3 * b5 * (4 * b1 * b2 + 2 * b1 * b5 - 2 * b2 * b4),
      b3 * b5 * b5 * (5 * b1 * b2 + b1 * b5 - b2 * b4),
      2 * b1 * b2 * b5p3,
  });
  g.p2 = UnivariatePolynomial({
      4 * b2 * b4 * d * d,
      8 * b2 * b3 * b4 * d * (b2 + b5),
      16 * b2 * b2 * b3 * b3 * b4 * b5 + 4 * b2 * b3 * b3 * b4 * b5 * b5 +
          4 * b2 * b2 * b2 * b3 * b3 * b4 + 4 * b1 * b3 * b3 * b3 * b3 * b5 +
          4 * b1 * b1 * b1 * b4 * b4 * b5 - 8 * b1 * b1 * b3 * b3 * b4 * b5 -
          8 * b1 * b2 * b2 * b4 * b4 * b5 - a3s * b1 * b4 * b4 * b5 - a3s * b2 * b3 * b3 * b4,
      2 * b3 * b5 * (4 * b1 * (b2 + b5) * d + b2 * b4 * (4 * b2 * (b2 + b5) - a3s)),
      b5 * (4 * b2 * b2 * b2 * b4 * b5 + 4 * b1 * b3 * b3 * b5 * b5 + 16 * b1 * b2 * b3 * b3 * b5 +
            4 * b1 * b2 * b2 * b3 * b3 - 8 * b1 * b1 * b2 * b4 * b5 - a3s * b2 * b4 * b5),
      8 * b1 * b2 * b3 * b5 * b5 * (b2 + b5),
      4 * b1 * b2 * b2 * b5p3,
  });
  return g;
}

Gamma13Polynomials build_gamma13_polynomials(const FlagParams& params) {
  const auto c = curvature_coefficients(params);
  const BigInt &a1 = c.a1(), &a2 = c.a2(), &a3 = c.a3(), &b1 = c.b1(), &b2 = c.b2(), &b3 = c.b3();
  using U = UnivariatePolynomial;
  const U P({b1, -a1, b1});
  const U Q({b2, -a2, b2});
  const U L1({-a1, 2 * b1});
  const U L2({-a2, 2 * b2});
  const U L1s = L1 * L1;
  const U L2s = L2 * L2;
  auto q1 = [&](const BigInt& shift) {
    const BigInt s = a3 + shift;
    const BigInt s2 = s * s;
    return (s2 * s2) * (P * P * Q * Q) + (b1 * b1) * (L1s * L1s * Q * Q) +
           (b2 * b2) * (L2s * L2s * P * P) - (2 * b1 * s2) * (L1s * P * Q * Q) -
           (2 * b2 * s2) * (L2s * P * P * Q) - (2 * b1 * b2) * (L1s * L2s * P * Q);
  };
  const U one_plus({1, 1});
  const U op2 = one_plus * one_plus;
  const U unit_quad({1, 0, 1});
  const BigInt a3s = a3 * a3;
  const U inner1 = BigInt(b1 * b1 + b2 * b2) * unit_quad - U::monomial(1, a1 * b1 + a2 * b2);
  const U inner2 = BigInt(b1 * b1 - b2 * b2) * unit_quad + U::monomial(1, a2 * b2 - a1 * b1);
  Gamma13Polynomials g;
  g.q1_minus = q1(-2 * b3);
  g.q1_plus = q1(2 * b3);
  g.q2 = BigInt(a3s * a3s) * (op2 * op2) - BigInt(8 * a3s) * (op2 * inner1) +
         BigInt(16) * (inner2 * inner2);
  return g;
}

ResultantCertificates resultant_certificates(const FlagParams& params) {
  const auto g12 = build_gamma12_polynomials(params);
  const auto g13 = build_gamma13_polynomials(params);
  auto torus = [](const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
    return sylvester_resultant(strip_zero_roots(p), strip_zero_roots(q));
  };
  ResultantCertificates r;
  r.gamma12 = sylvester_resultant(g12.p1, g12.p2);
  r.gamma12_torus = torus(g12.p1, g12.p2);
  r.gamma13_minus = sylvester_resultant(g13.q1_minus, g13.q2);
  r.gamma13_minus_torus = torus(g13.q1_minus, g13.q2);
  r.gamma13_plus = sylvester_resultant(g13.q1_plus, g13.q2);
  r.gamma13_plus_torus = torus(g13.q1_plus, g13.q2);
  return r;
}

std::string to_string(FaceVerdict v) {
  switch (v) {
    case FaceVerdict::Nonsingular: return "nonsingular";
    case FaceVerdict::Singular: return "singular";
    case FaceVerdict::AlwaysInconsistent: return "always-inconsistent";
  }
  return "nonsingular";
}

FaceVerdict face_verdict_from_string(const std::string& s) {
  for (auto v : {FaceVerdict::Nonsingular, FaceVerdict::Singular, FaceVerdict::AlwaysInconsistent}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict: " + s);
}

FlagParams member_params(const FlagParams& params, const CensusMember& member) {
  const auto& group = bc2_geometry().group;
  return group.swaps_params.at(member.group_element) ? params.swapped() : params;
}

FaceReport face_certificate(const FlagParams& params, const CensusOrbit& orbit,
                            const CensusMember& member) {
  const auto& geo = bc2_geometry();
  const FaceDescriptor* fd = find_face(geo.lattice, member.points);
  if (fd == nullptr) throw std::invalid_argument("census member is not a face");
  FaceReport r;
  r.face = member.id;
  r.orbit_label = orbit.label;
  r.normal = member.normal;
  r.klass = fd->klass;

  const FlagParams q = member_params(params, member);
  const auto c = curvature_coefficients(q);
  auto set = [&](FaceVerdict inconsistent_or_exact, const std::string& name, const Rational& value) {
    r.certificate_name = name;
    r.certificate = value;
    r.verdict = inconsistent_or_exact;
  };
  auto exact = [&](const std::string& name, const Rational& value) {
    set(value == 0 ? FaceVerdict::Singular : FaceVerdict::Nonsingular, name, value);
  };

  switch (orbit.label) {
    case 1:
      exact("parallelogram determinant", parallelogram_determinant(params, *fd));
      r.details.push_back({"b2*b5-b3^2", Rational(c.b2() * c.b5() - c.b3() * c.b3())});
      break;
    case 2:
      exact("a1*b2-a2*b1", Rational(c.a1() * c.b2() - c.a2() * c.b1()));
      break;
    case 3:
    case 4:
    case 5:
    case 6:
    case 8:
      set(FaceVerdict::AlwaysInconsistent, "(a1+2*b1)*(a2+2*b2)",
          Rational((c.a1() + 2 * c.b1()) * (c.a2() + 2 * c.b2())));
      break;
    case 7:
      set(FaceVerdict::AlwaysInconsistent, "-b2*b4/(b1*b5)",
          -Rational(c.b2() * c.b4()) / Rational(c.b1() * c.b5()));
      break;
    case 9: {
      const Rational lhs(4 * (c.b3() * c.b3() - c.b2() * c.b5()) * (c.a2() + 2 * c.b2()));
      const Rational rhs(c.a5() * c.a5() * c.b2());
      set(FaceVerdict::AlwaysInconsistent, "4*(b3^2-b2*b5)*(a2+2*b2)-a5^2*b2", lhs - rhs);
      r.details.push_back({"4*(b3^2-b2*b5)*(a2+2*b2)", lhs});
      r.details.push_back({"a5^2*b2", rhs});
      break;
    }
    case 10:
      set(FaceVerdict::AlwaysInconsistent, "a5", Rational(c.a5()));
      break;
    case 11:
      exact("quartic", Rational(gamma11_certificate(c)));
      break;
    case 12: {
      const auto res = resultant_certificates(q);
      exact("Res(p1,p2) off z=0", Rational(res.gamma12_torus));
      r.details.push_back({"Res(p1,p2)", Rational(res.gamma12)});
      break;
    }
    case 13: {
      const auto res = resultant_certificates(q);
      const Rational branch(c.b1() * (c.a1() + 2 * c.b1()) - c.b2() * (c.a2() + 2 * c.b2()));
      exact("b1*(a1+2*b1)-b2*(a2+2*b2)", branch);
      r.details.push_back({"Res(q1-,q2) off y=0", Rational(res.gamma13_minus_torus)});
      r.details.push_back({"Res(q1+,q2) off y=0", Rational(res.gamma13_plus_torus)});
      r.details.push_back({"Res(q1-,q2)", Rational(res.gamma13_minus)});
      r.details.push_back({"Res(q1+,q2)", Rational(res.gamma13_plus)});
      if (res.gamma13_minus_torus == 0 || res.gamma13_plus_torus == 0) r.verdict = FaceVerdict::Singular;
      break;
    }
    default:
      r.certificate_name = "none";
      r.certificate = 0;
      r.verdict = FaceVerdict::Nonsingular;
      break;
  }
  return r;
}

namespace {

std::string firing_description(const FaceReport& f) {
  const std::string stem = "Γ" + std::to_string(f.orbit_label);
  if (f.discrepancy) return "probe witness on " + f.face + " contradicts the exact analysis";
  switch (f.orbit_label) {
    case 1: return stem + " parallelogram";
    case 2: return stem + " n1=n2";
    case 11: return stem + " quartic";
    case 12: return stem + " resultant";
    case 13: return f.certificate == 0 ? stem + " n1=n2" : stem + " resultant";
    default: return stem;
  }
}

}  // namespace

DiscriminantReport discriminant_report(const FlagParams& params, const DiscriminantOptions& options) {
  const auto& geo = bc2_geometry();
  DiscriminantReport rep;
  rep.params = params;
  rep.volume = geo.volume;
  for (const auto& f : geo.lattice) rep.automatic_faces += !f.marked();
  rep.closed_forms = closed_form_tests(params);
  rep.stated_conditions = degeneracy_equations(params);

  std::vector<std::pair<const CensusOrbit*, const CensusMember*>> members;
  for (const auto& o : geo.census.orbits)
    for (const auto& m : o.members) members.emplace_back(&o, &m);
  rep.faces.resize(members.size());
  parallel_for(
      members.size(),
      [&](std::size_t i) {
        FaceReport r = face_certificate(params, *members[i].first, *members[i].second);
        if (options.probe) {
          ProbeBudget budget = options.budget;
          budget.seed = options.budget.seed * 1000003ULL + i;
          r.witness = numeric_singularity_probe(truncated_system(params, members[i].second->points), budget);
          r.discrepancy = r.witness.has_value() && r.verdict != FaceVerdict::Singular;
        }
        rep.faces[i] = std::move(r);
      },
      options.threads);

  std::set<std::string> seen;
  for (const auto& f : rep.faces) {
    if (f.verdict != FaceVerdict::Singular && !f.discrepancy) continue;
    const std::string d = firing_description(f);
    if (seen.insert(d).second) rep.firing.push_back(d);
  }
  rep.certified = rep.firing.empty();
  if (rep.certified) {
    rep.verdict = "certified: E = ν(Δ) = " + rep.volume.get_str();
  } else {
    std::ostringstream os;
    os << "degenerate: ";
    for (std::size_t k = 0; k < rep.firing.size(); ++k) os << (k ? "; " : "") << rep.firing[k];
    rep.verdict = os.str();
  }
  return rep;
}

}  // namespace flagbkk
