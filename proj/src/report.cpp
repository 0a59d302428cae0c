#include "flagbkk/report.hpp"

#include <stdexcept>

#include "flagbkk/curvature.hpp"

namespace flagbkk {

namespace {

Json exact(const Rational& q) { return rational_to_string(q); }
Json exact(const BigInt& z) { return z.get_str(); }
Rational rational(const Json& j) { return rational_from_string(j.get<std::string>()); }
BigInt integer(const Json& j) { return BigInt(j.get<std::string>()); }

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }
Complex complex_value(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json point_json(const ComplexPoint& p) {
  Json out = Json::array();
  for (const auto& z : p) out.push_back(complex_json(z));
  return out;
}

ComplexPoint point_value(const Json& j) {
  ComplexPoint out;
  for (const auto& z : j) out.push_back(complex_value(z));
  return out;
}

Json named_map(const std::map<std::string, Rational>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = exact(v);
  return out;
}

std::map<std::string, Rational> named_map_value(const Json& j) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) out[k] = rational(v);
  return out;
}

Json to_json(const CensusOrbitSummary& o) {
  return {{"label", o.label},       {"normal", o.normal},           {"dim", o.dim},
          {"class", to_string(o.klass)}, {"point_count", o.point_count}, {"members", o.members}};
}

CensusOrbitSummary orbit_summary_from_json(const Json& j) {
  CensusOrbitSummary o;
  o.label = j.at("label");
  o.normal = j.at("normal").get<ExponentVector>();
  o.dim = j.at("dim");
  o.klass = face_class_from_string(j.at("class"));
  o.point_count = j.at("point_count");
  o.members = j.at("members").get<std::vector<std::string>>();
  return o;
}

std::vector<CensusOrbitSummary> census_summary(const MarkedFaceCensus& census) {
  std::vector<CensusOrbitSummary> out;
  for (const auto& o : census.orbits) {
    CensusOrbitSummary s{o.label, o.normal, o.dim, o.klass, o.point_count, {}};
    for (const auto& m : o.members) s.members.push_back(m.id);
    out.push_back(std::move(s));
  }
  return out;
}

Json census_json(const std::vector<CensusOrbitSummary>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) out.push_back(to_json(o));
  return out;
}

std::vector<CensusOrbitSummary> census_value(const Json& j) {
  std::vector<CensusOrbitSummary> out;
  for (const auto& o : j) out.push_back(orbit_summary_from_json(o));
  return out;
}

std::string signed_text(const Rational& q) {
  const std::string s = rational_to_string(q);
  return q < 0 ? "−" + s.substr(1) : s;
}

}  // namespace

PolytopeReport polytope_report() {
  const auto& geo = bc2_geometry();
  PolytopeReport r;
  r.points = static_cast<int>(geo.polytope.points.size());
  r.vertices = static_cast<int>(geo.polytope.vertices.size());
  r.facets = static_cast<int>(geo.polytope.facets.size());
  r.f_vector = f_vector(geo.polytope, geo.lattice);
  r.volume = geo.volume;
  r.marked_faces = geo.census.total_faces();
  r.orbits = census_summary(geo.census);
  return r;
}

SolveReport solve_report(const FlagParams& params, const SolveRequest& request) {
  SolveReport r;
  const auto cs = clear_denominators(einstein_system(params));
  if (request.method == "multistart")
    r.solutions = multistart_solve(cs, request.options);
  else if (request.method == "homotopy")
    r.solutions = homotopy_solve(cs, request.options);
  else
    throw std::invalid_argument("unknown method: " + request.method);
  DiscriminantOptions exact_only;
  exact_only.probe = false;
  std::vector<std::string> warnings;
  if (!discriminant_report(params, exact_only).certified)
    warnings.push_back("parameters degenerate; BKK certificate unavailable");
  if (r.solutions.path_failures > 0)
    warnings.push_back("partial results: " + std::to_string(r.solutions.path_failures) + " paths failed");
  for (std::size_t k = 0; k < warnings.size(); ++k) r.warning += (k ? "; " : "") + warnings[k];
  return r;
}

AnalysisReport analysis_report(const FlagParams& params, const DiscriminantOptions& options,
                               const std::optional<SolveRequest>& solve) {
  AnalysisReport r;
  r.params = params;
  r.dimensions = dimensions(params);
  r.structure_constants = structure_constants(params);
  r.coefficients = curvature_coefficients(params);
  r.volume = bc2_geometry().volume;
  r.census = census_summary(bc2_geometry().census);
  r.discriminant = discriminant_report(params, options);
  r.verdict = r.discriminant.verdict;
  if (solve) r.solve = solve_report(params, *solve);
  return r;
}

ContractionReport contraction_report(const FlagParams& params, const std::string& face_id) {
  const auto& geo = bc2_geometry();
  const CensusOrbit* orbit = nullptr;
  const auto member = find_member(geo.census, face_id, &orbit);
  if (!member) throw std::invalid_argument("unknown face id: " + face_id);
  ContractionReport r;
  r.params = params;
  r.face_id = face_id;
  const auto model = contract(params, face_id);
  r.normal = member->normal;
  r.curvature = model.curvature;
  r.certificate = face_certificate(params, *orbit, *member);
  if (orbit->label == 1) r.family = verify_family(params, family_variant_from_string(face_id));
  if (r.certificate.verdict != FaceVerdict::Singular)
    r.status = "no Einstein metric on contraction (certificate " + signed_text(r.certificate.certificate) + ")";
  else if (!r.family)
    r.status = "Ricci-flat Einstein metrics exist on contraction (certificate 0)";
  else if (r.family->verified)
    r.status = "Ricci-flat family verified (exact)";
  else
    r.status = "Ricci-flat family failed verification";
  return r;
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", exact(c)}});
  return {{"arity", p.arity()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
  LaurentPolynomial p(j.at("arity").get<std::size_t>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exponent").get<ExponentVector>(), rational(t.at("coefficient")));
  return p;
}

Json to_json(const FlagParams& p) { return {{"n1", p.n1}, {"n2", p.n2}, {"n3", p.n3}}; }

FlagParams flag_params_from_json(const Json& j) { return FlagParams::make(j.at("n1"), j.at("n2"), j.at("n3")); }

Json to_json(const Solution& s) {
  return {{"t", point_json(s.t)}, {"residual", s.residual}, {"condition", s.condition}, {"tag", to_string(s.tag)}};
}

Solution solution_from_json(const Json& j) {
  Solution s;
  s.t = point_value(j.at("t"));
  s.residual = j.at("residual");
  s.condition = j.at("condition");
  s.tag = solution_tag_from_string(j.at("tag"));
  return s;
}

Json to_json(const SolutionSet& s) {
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(to_json(p));
  return {{"params", to_json(s.params)},
          {"method", s.method},
          {"seed", s.seed},
          {"count", s.points.size()},
          {"points", points},
          {"attempts", s.attempts},
          {"path_failures", s.path_failures},
          {"singular_endpoints", s.singular_endpoints},
          {"ill_conditioned", s.ill_conditioned},
          {"residual_rejects", s.residual_rejects},
          {"repeated_endpoints", s.repeated_endpoints}};
}

SolutionSet solution_set_from_json(const Json& j) {
  SolutionSet s;
  s.params = flag_params_from_json(j.at("params"));
  s.method = j.at("method");
  s.seed = j.at("seed");
  for (const auto& p : j.at("points")) s.points.push_back(solution_from_json(p));
  s.attempts = j.at("attempts");
  s.path_failures = j.at("path_failures");
  s.singular_endpoints = j.at("singular_endpoints");
  s.ill_conditioned = j.at("ill_conditioned");
  s.residual_rejects = j.at("residual_rejects");
  s.repeated_endpoints = j.at("repeated_endpoints");
  return s;
}

Json to_json(const ProbeWitness& w) {
  return {{"torus", point_json(w.torus)},
          {"local", point_json(w.local)},
          {"residual", w.residual},
          {"starts_used", w.starts_used}};
}

ProbeWitness probe_witness_from_json(const Json& j) {
  ProbeWitness w;
  w.torus = point_value(j.at("torus"));
  w.local = point_value(j.at("local"));
  w.residual = j.at("residual");
  w.starts_used = j.at("starts_used");
  return w;
}

Json to_json(const FaceReport& f) {
  Json details = Json::array();
  for (const auto& d : f.details) details.push_back({{"name", d.name}, {"value", exact(d.value)}});
  return {{"face", f.face},
          {"orbit_label", f.orbit_label},
          {"normal", f.normal},
          {"class", to_string(f.klass)},
          {"verdict", to_string(f.verdict)},
          {"certificate_name", f.certificate_name},
          {"certificate", exact(f.certificate)},
          {"details", details},
          {"witness", f.witness ? to_json(*f.witness) : Json(nullptr)},
          {"discrepancy", f.discrepancy}};
}

FaceReport face_report_from_json(const Json& j) {
  FaceReport f;
  f.face = j.at("face");
  f.orbit_label = j.at("orbit_label");
  f.normal = j.at("normal").get<ExponentVector>();
  f.klass = face_class_from_string(j.at("class"));
  f.verdict = face_verdict_from_string(j.at("verdict"));
  f.certificate_name = j.at("certificate_name");
  f.certificate = rational(j.at("certificate"));
  for (const auto& d : j.at("details")) f.details.push_back({d.at("name"), rational(d.at("value"))});
  if (!j.at("witness").is_null()) f.witness = probe_witness_from_json(j.at("witness"));
  f.discrepancy = j.at("discrepancy");
  return f;
}

Json to_json(const DiscriminantReport& r) {
  Json faces = Json::array();
  for (const auto& f : r.faces) faces.push_back(to_json(f));
  return {{"params", to_json(r.params)},
          {"volume", exact(r.volume)},
          {"automatic_faces", r.automatic_faces},
          {"faces", faces},
          {"closed_forms", named_map(r.closed_forms)},
          {"stated_conditions", named_map(r.stated_conditions)},
          {"firing", r.firing},
          {"certified", r.certified},
          {"verdict", r.verdict}};
}

DiscriminantReport discriminant_report_from_json(const Json& j) {
  DiscriminantReport r;
  r.params = flag_params_from_json(j.at("params"));
  r.volume = integer(j.at("volume"));
  r.automatic_faces = j.at("automatic_faces");
  for (const auto& f : j.at("faces")) r.faces.push_back(face_report_from_json(f));
  r.closed_forms = named_map_value(j.at("closed_forms"));
  r.stated_conditions = named_map_value(j.at("stated_conditions"));
  r.firing = j.at("firing").get<std::vector<std::string>>();
  r.certified = j.at("certified");
  r.verdict = j.at("verdict");
  return r;
}

Json to_json(const FamilyVerification& v) {
  return {{"params", to_json(v.params)},
          {"variant", to_string(v.variant)},
          {"certificate", exact(v.certificate)},
          {"stated_condition", exact(v.stated_condition)},
          {"applicable", v.applicable},
          {"samples", v.samples},
          {"flat_samples", v.flat_samples},
          {"lorentzian", v.lorentzian},
          {"verified", v.verified}};
}

FamilyVerification family_verification_from_json(const Json& j) {
  FamilyVerification v;
  v.params = flag_params_from_json(j.at("params"));
  v.variant = family_variant_from_string(j.at("variant"));
  v.certificate = rational(j.at("certificate"));
  v.stated_condition = rational(j.at("stated_condition"));
  v.applicable = j.at("applicable");
  v.samples = j.at("samples");
  v.flat_samples = j.at("flat_samples");
  v.lorentzian = j.at("lorentzian");
  v.verified = j.at("verified");
  return v;
}

Json to_json(const DegenerateTriple& d) { return {{"params", to_json(d.params)}, {"firing", d.firing}}; }

DegenerateTriple degenerate_triple_from_json(const Json& j) {
  return {flag_params_from_json(j.at("params")), j.at("firing").get<std::vector<std::string>>()};
}

Json to_json(const PolytopeReport& r) {
  return {{"points", r.points},     {"vertices", r.vertices},         {"facets", r.facets},
          {"f_vector", r.f_vector}, {"volume", exact(r.volume)},      {"marked_faces", r.marked_faces},
          {"orbits", census_json(r.orbits)}};
}

PolytopeReport polytope_report_from_json(const Json& j) {
  PolytopeReport r;
  r.points = j.at("points");
  r.vertices = j.at("vertices");
  r.facets = j.at("facets");
  r.f_vector = j.at("f_vector").get<std::vector<int>>();
  r.volume = integer(j.at("volume"));
  r.marked_faces = j.at("marked_faces");
  r.orbits = census_value(j.at("orbits"));
  return r;
}

Json to_json(const SolveReport& r) { return {{"solutions", to_json(r.solutions)}, {"warning", r.warning}}; }

SolveReport solve_report_from_json(const Json& j) {
  return {solution_set_from_json(j.at("solutions")), j.at("warning").get<std::string>()};
}

Json to_json(const AnalysisReport& r) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : r.coefficients.a) a.push_back(exact(x));
  for (const auto& x : r.coefficients.b) b.push_back(exact(x));
  const auto& sc = r.structure_constants;
  return {{"params", to_json(r.params)},
          {"dimensions", r.dimensions.N},
          {"structure_constants",
           {{"134", exact(sc.b134)},
            {"234", exact(sc.b234)},
            {"356", exact(sc.b356)},
            {"456", exact(sc.b456)},
            {"155", exact(sc.b155)},
            {"266", exact(sc.b266)}}},
          {"coefficients", {{"a", a}, {"b", b}}},
          {"volume", exact(r.volume)},
          {"census", census_json(r.census)},
          {"discriminant", to_json(r.discriminant)},
          {"verdict", r.verdict},
          {"solve", r.solve ? to_json(*r.solve) : Json(nullptr)}};
}

AnalysisReport analysis_report_from_json(const Json& j) {
  AnalysisReport r;
  r.params = flag_params_from_json(j.at("params"));
  r.dimensions.N = j.at("dimensions").get<std::array<long, kSummands>>();
  const auto& sc = j.at("structure_constants");
  r.structure_constants = {rational(sc.at("134")), rational(sc.at("234")), rational(sc.at("356")),
                           rational(sc.at("456")), rational(sc.at("155")), rational(sc.at("266"))};
  for (std::size_t k = 0; k < 5; ++k) {
    r.coefficients.a[k] = integer(j.at("coefficients").at("a").at(k));
    r.coefficients.b[k] = integer(j.at("coefficients").at("b").at(k));
  }
  r.volume = integer(j.at("volume"));
  r.census = census_value(j.at("census"));
  r.discriminant = discriminant_report_from_json(j.at("discriminant"));
  r.verdict = j.at("verdict");
  if (!j.at("solve").is_null()) r.solve = solve_report_from_json(j.at("solve"));
  return r;
}

Json to_json(const ContractionReport& r) {
  return {{"params", to_json(r.params)},
          {"face", r.face_id},
          {"normal", r.normal},
          {"curvature", to_json(r.curvature)},
          {"curvature_text", to_string(r.curvature)},
          {"certificate", to_json(r.certificate)},
          {"family", r.family ? to_json(*r.family) : Json(nullptr)},
          {"status", r.status}};
}

ContractionReport contraction_report_from_json(const Json& j) {
  ContractionReport r;
  r.params = flag_params_from_json(j.at("params"));
  r.face_id = j.at("face");
  r.normal = j.at("normal").get<ExponentVector>();
  r.curvature = laurent_from_json(j.at("curvature"));
  r.certificate = face_report_from_json(j.at("certificate"));
  if (!j.at("family").is_null()) r.family = family_verification_from_json(j.at("family"));
  r.status = j.at("status");
  return r;
}

}  // namespace flagbkk
