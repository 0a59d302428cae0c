#include "cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "flagbkk/report.hpp"

namespace flagbkk::cli {

namespace {

std::string exponent_text(const ExponentVector& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
  os << ")";
  return os.str();
}

std::string complex_text(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void print_census(std::ostream& out, const std::vector<CensusOrbitSummary>& orbits) {
  out << "label  normal          dim  size  class          members\n";
  for (const auto& o : orbits) {
    out << std::left << std::setw(7) << ("Γ" + std::to_string(o.label)).append(o.label < 10 ? " " : "")
        << std::setw(16) << exponent_text(o.normal) << std::setw(5) << o.dim << std::setw(6) << o.members.size()
        << std::setw(15) << to_string(o.klass);
    for (std::size_t k = 0; k < o.members.size(); ++k) out << (k ? " " : "") << o.members[k];
    out << std::right << "\n";
  }
}

void print_solutions(std::ostream& out, const SolveReport& r) {
  const auto& s = r.solutions;
  int positive = 0, mixed = 0, complex = 0;
  for (const auto& p : s.points) {
    positive += p.tag == SolutionTag::RealPositive;
    mixed += p.tag == SolutionTag::RealMixedSign;
    complex += p.tag == SolutionTag::Complex;
  }
  if (!r.warning.empty()) out << "warning: " << r.warning << "\n";
  out << "method " << s.method << ", seed " << s.seed << ", attempts " << s.attempts << "\n";
  out << "solutions: " << s.points.size() << " (real-positive " << positive << ", real-mixed-sign " << mixed
      << ", complex " << complex << ")\n";
  out << "path failures " << s.path_failures << ", singular endpoints " << s.singular_endpoints
      << ", ill-conditioned " << s.ill_conditioned << ", residual rejects " << s.residual_rejects
      << ", repeated endpoints " << s.repeated_endpoints << "\n";
  for (const auto& p : s.points) {
    out << "  [" << to_string(p.tag) << "] residual " << std::setprecision(3) << p.residual << "  t = (";
    for (std::size_t k = 0; k < p.t.size(); ++k) out << (k ? ", " : "") << complex_text(p.t[k]);
    out << ", 1)\n";
  }
}

void print_analysis(std::ostream& out, const AnalysisReport& r) {
  out << "M" << to_string(r.params) << "\n";
  out << "dimensions N1..N6:";
  for (long n : r.dimensions.N) out << " " << n;
  out << "\n";
  const auto& sc = r.structure_constants;
  out << "structure constants [134] " << rational_to_string(sc.b134) << ", [234] " << rational_to_string(sc.b234)
      << ", [356] " << rational_to_string(sc.b356) << ", [456] " << rational_to_string(sc.b456) << ", [155] "
      << rational_to_string(sc.b155) << ", [266] " << rational_to_string(sc.b266) << "\n";
  out << "coefficients a:";
  for (const auto& x : r.coefficients.a) out << " " << x.get_str();
  out << "\ncoefficients b:";
  for (const auto& x : r.coefficients.b) out << " " << x.get_str();
  out << "\nnormalized volume " << r.volume.get_str() << "\n";
  out << "faces checked automatically: " << r.discriminant.automatic_faces << "\n";
  out << "marked faces:\n";
  for (const auto& f : r.discriminant.faces) {
    out << "  " << std::left << std::setw(8) << f.face << std::setw(24) << to_string(f.verdict) << std::right
        << f.certificate_name << " = " << rational_to_string(f.certificate);
    if (f.witness) out << "  (torus witness, residual " << std::setprecision(2) << f.witness->residual << ")";
    out << "\n";
  }
  out << "verdict: " << r.verdict << "\n";
  if (r.solve) print_solutions(out, *r.solve);
}

void print_contraction(std::ostream& out, const ContractionReport& r) {
  out << "contraction of M" << to_string(r.params) << " by " << r.face_id << ", normal " << exponent_text(r.normal)
      << "\n";
  out << "curvature: " << to_string(r.curvature) << "\n";
  out << r.certificate.certificate_name << " = " << rational_to_string(r.certificate.certificate) << " ("
      << to_string(r.certificate.verdict) << ")\n";
  if (r.family)
    out << "family " << to_string(r.family->variant) << ": " << r.family->flat_samples << "/" << r.family->samples
        << " exact flat samples, stated condition " << rational_to_string(r.family->stated_condition) << "\n";
  out << r.status << "\n";
}

struct ParamArgs {
  int n1 = 0, n2 = 0, n3 = 0;
  void add(CLI::App* cmd) {
    cmd->add_option("n1", n1)->required();
    cmd->add_option("n2", n2)->required();
    cmd->add_option("n3", n3)->required();
  }
  FlagParams get() const { return FlagParams::make(n1, n2, n3); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Einstein metric counts and contractions for the flag manifolds M(n1,n2,n3)", "flagbkk"};
  app.require_subcommand(1);

  ParamArgs analyze_params, solve_params, contract_params;
  bool json = false, analyze_solve = false;
  SolveRequest request;
  std::string face_id;

  auto* analyze = app.add_subcommand("analyze", "certify the solution count for one parameter triple");
  analyze_params.add(analyze);
  analyze->add_flag("--solve", analyze_solve, "also run the solver");
  analyze->add_flag("--json", json, "print JSON");

  auto* polytope = app.add_subcommand("polytope", "Newton polytope volume and marked-face census");
  polytope->add_flag("--json", json, "print JSON");

  auto* solve = app.add_subcommand("solve", "enumerate complex Einstein metrics numerically");
  solve_params.add(solve);
  solve->add_option("--seed", request.options.seed, "random seed");
  solve->add_option("--method", request.method, "multistart or homotopy")
      ->check(CLI::IsMember({"multistart", "homotopy"}));
  solve->add_option("--nstarts", request.options.starts, "multistart starts")->check(CLI::PositiveNumber);
  solve->add_option("--tol-residual", request.options.tol_residual, "acceptance residual");
  solve->add_option("--tol-dedup", request.options.tol_dedup, "duplicate distance");
  solve->add_flag("--json", json, "print JSON");

  auto* contract_cmd = app.add_subcommand("contract", "curvature of the contraction by a marked face");
  contract_params.add(contract_cmd);
  contract_cmd->add_option("face", face_id, "census id such as G1_11")->required();
  contract_cmd->add_flag("--json", json, "print JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*analyze) {
      std::optional<SolveRequest> with_solve;
      if (analyze_solve) with_solve = request;
      const auto r = analysis_report(analyze_params.get(), {}, with_solve);
      if (json)
        out << to_json(r).dump(2) << "\n";
      else
        print_analysis(out, r);
    } else if (*polytope) {
      const auto r = polytope_report();
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "points " << r.points << ", vertices " << r.vertices << ", facets " << r.facets << "\n";
        out << "f-vector:";
        for (int f : r.f_vector) out << " " << f;
        out << "\nν = " << r.volume.get_str() << "\n";
        out << "marked faces " << r.marked_faces << " in " << r.orbits.size() << " orbits\n";
        print_census(out, r.orbits);
      }
    } else if (*solve) {
      const auto r = solve_report(solve_params.get(), request);
      if (json)
        out << to_json(r).dump(2) << "\n";
      else
        print_solutions(out, r);
    } else if (*contract_cmd) {
      const FlagParams p = contract_params.get();
      if (!find_member(bc2_geometry().census, face_id)) {
        err << "unknown face id: " << face_id << "\n";
        return kExitUsage;
      }
      const auto r = contraction_report(p, face_id);
      if (json)
        out << to_json(r).dump(2) << "\n";
      else
        print_contraction(out, r);
    }
  } catch (const InvalidParams& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace flagbkk::cli
