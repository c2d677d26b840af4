#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orthoplex/centers.hpp"
#include "orthoplex/document.hpp"
#include "orthoplex/families.hpp"
#include "orthoplex/orthocentric.hpp"
#include "orthoplex/verify.hpp"

namespace orthoplex::cli {

namespace {

struct Failure {
  int code;
};

TolerancePolicy policy_from(std::optional<double> tol) {
  TolerancePolicy base;
  if (!tol) {
    if (const char* env = std::getenv("ORTHOPLEX_TOL"); env && *env) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw InputError("ORTHOPLEX_TOL is not a number");
      tol = v;
    }
  }
  return tol ? base.with_rel(*tol) : base;
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << j.dump(2) << '\n';
}

std::string yes_no(bool b) {
  return b ? "yes" : "no";
}

std::string format_list(const Json& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].dump();
  return os.str();
}

void print_summary(const Json& a, std::ostream& out) {
  const Json& m = a["metrics"];
  out << "dimension         " << a["dim"] << '\n';
  out << "volume            " << m["volume"] << '\n';
  out << "circumradius      " << m["circumradius"] << '\n';
  out << "inradius          " << m["inradius"] << '\n';
  out << "diameter          " << m["diameter"] << '\n';
  out << "orthocentric      " << yes_no(a["orthocentric"].get<bool>()) << '\n';
  if (!a["ortho_params"].is_null()) {
    const Json& p = a["ortho_params"];
    out << "class             " << p["class"].get<std::string>();
    if (!p["rectangular_vertex"].is_null()) out << " at vertex " << p["rectangular_vertex"];
    out << '\n';
    out << "obtuseness        " << p["obtuseness"] << '\n';
    out << "orthocenter bary  " << format_list(p["bary"]) << '\n';
  }
  const Json& s = a["shape"];
  out << "regular           " << yes_no(s["is_regular"].get<bool>()) << '\n';
  out << "equiareal         " << yes_no(s["is_equiareal"].get<bool>()) << '\n';
  out << "equiradial        " << yes_no(s["is_equiradial"].get<bool>()) << '\n';
  out << "well-distributed  " << yes_no(s["has_well_distributed_edges"].get<bool>()) << '\n';
  out << "C interior        " << yes_no(s["circumcenter_interior"].get<bool>()) << '\n';
  out << "coincident        ";
  if (a["coincident_pairs"].empty()) out << "none";
  for (std::size_t i = 0; i < a["coincident_pairs"].size(); ++i) {
    const Json& pr = a["coincident_pairs"][i];
    out << (i ? ", " : "") << pr[0].get<std::string>() << '=' << pr[1].get<std::string>();
  }
  out << '\n';
  if (!a["euler"].is_null() && !a["euler"]["ratio"].is_null()) {
    out << "Euler ratio CG:GH " << a["euler"]["ratio"] << '\n';
  }
  out << "facet circumradii " << format_list(a["facet_circumradii"]) << '\n';
}

std::string fmt(double v) {
  return Json(v).dump();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, analyze and verify orthocentric simplices", "orthoplex"};
  app.require_subcommand(1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a family member and print its simplex document");
  std::string kind;
  int dim = 0;
  double edge = 1.0;
  std::vector<double> bary;
  double obtuseness = 1.0;
  double base_edge = 1.0;
  std::optional<double> apex_edge;
  std::vector<double> legs;
  std::optional<int> group;
  int branch = 1;
  std::string out_path;
  construct_cmd->add_option("kind", kind, "regular, ortho, kite, rect or equiradial")
      ->required()
      ->check(CLI::IsMember({"regular", "ortho", "kite", "rect", "equiradial"}));
  construct_cmd->add_option("--dim", dim, "Dimension d");
  construct_cmd->add_option("--edge", edge, "Edge length (regular)");
  construct_cmd->add_option("--bary", bary, "Orthocenter barycentrics a1,...,a_{d+1} (ortho)")->delimiter(',');
  construct_cmd->add_option("--obtuseness", obtuseness, "Scale |c| of the obtuseness (ortho)");
  construct_cmd->add_option("--base-edge", base_edge, "Base edge s (kite)");
  construct_cmd->add_option("--apex-edge", apex_edge, "Apex edge t (kite)");
  construct_cmd->add_option("--legs", legs, "Leg lengths b1,...,bd (rect)")->delimiter(',');
  construct_cmd->add_option("--m", group, "Size of the first vertex group (equiradial)");
  construct_cmd->add_option("--branch", branch, "Root assignment 1 or 2 (equiradial)");
  construct_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a simplex document");
  std::string in_path;
  std::optional<double> tol;
  bool as_json = false;
  analyze_cmd->add_option("input", in_path, "Simplex document (default stdin)");
  analyze_cmd->add_option("--tol", tol, "Relative tolerance (overrides ORTHOPLEX_TOL)");
  analyze_cmd->add_flag("--json", as_json, "Print the full analysis document");

  // lift-rect
  auto* lift_cmd = app.add_subcommand("lift-rect", "Lift an acute orthocentric simplex to a rectangular one");
  lift_cmd->add_option("input", in_path, "Simplex document (default stdin)");
  lift_cmd->add_option("--tol", tol, "Relative tolerance (overrides ORTHOPLEX_TOL)");
  lift_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  std::string suite = "all";
  SuiteConfig config;
  bool timing = false;
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'");
  verify_cmd->add_option("--samples", config.samples, "Random samples per suite");
  verify_cmd->add_option("--seed", config.seed, "Master seed");
  verify_cmd->add_option("--dim-min", config.d_min, "Smallest sampled dimension");
  verify_cmd->add_option("--dim-max", config.d_max, "Largest sampled dimension");
  verify_cmd->add_option("--tol", tol, "Relative tolerance (overrides ORTHOPLEX_TOL)");
  verify_cmd->add_flag("--timing", timing, "Report wall time per suite");

  auto error = [&](const std::string& what, Json extra = Json::object()) {
    extra["error"] = what;
    err << extra.dump() << '\n';
    return input_error;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    return error(e.what());
  }

  try {
    if (construct_cmd->parsed()) {
      if (kind != "ortho" && kind != "rect" && dim == 0) throw InputError("--dim is required for '" + kind + "'");
      const TolerancePolicy policy;
      std::optional<Simplex> s;
      std::string label;
      if (kind == "regular") {
        s = regular(dim, edge, policy);
        label = "regular(d=" + std::to_string(dim) + ", edge=" + fmt(edge) + ")";
      } else if (kind == "ortho") {
        if (bary.empty()) throw InputError("--bary is required for 'ortho'");
        if (dim != 0 && static_cast<std::size_t>(dim) + 1 != bary.size()) throw InputError("--bary needs d+1 values");
        s = construct(std::span<const double>(bary), obtuseness, policy);
        label = "ortho(obtuseness scale " + fmt(obtuseness) + ")";
      } else if (kind == "kite") {
        if (!apex_edge) throw InputError("--apex-edge is required for 'kite'");
        s = kite({dim, base_edge, *apex_edge}, policy);
        label = "kite(d=" + std::to_string(dim) + ", s=" + fmt(base_edge) + ", t=" + fmt(*apex_edge) + ")";
      } else if (kind == "rect") {
        if (legs.empty()) throw InputError("--legs is required for 'rect'");
        if (dim != 0 && static_cast<std::size_t>(dim) != legs.size()) throw InputError("--legs needs d values");
        s = rectangular({legs}, policy);
        label = "rectangular";
      } else {
        if (group) {
          s = equiradial_general(dim, *group, branch, policy).simplex;
          label = "equiradial(d=" + std::to_string(dim) + ", m=" + std::to_string(*group) + ", branch=" +
                  std::to_string(branch) + ")";
        } else {
          const KiteSpec spec = equiradial_kite(dim);
          s = kite(spec, policy);
          label = "equiradial kite(d=" + std::to_string(dim) + ")";
          if (dim == 4) label += ", rectangular at apex";
        }
      }
      write_json(simplex_to_json(*s, label), out_path, out);
      return ok;
    }

    if (analyze_cmd->parsed()) {
      const TolerancePolicy policy = policy_from(tol);
      const SimplexDocument doc = simplex_from_json(read_json(in_path, in), policy);
      const Json analysis = analysis_to_json(doc.simplex, policy);
      if (as_json) {
        out << analysis.dump(2) << '\n';
      } else {
        print_summary(analysis, out);
      }
      return ok;
    }

    if (lift_cmd->parsed()) {
      const TolerancePolicy policy = policy_from(tol);
      const SimplexDocument doc = simplex_from_json(read_json(in_path, in), policy);
      const RectLift lift = lift_to_rectangular(doc.simplex, policy);
      write_json(simplex_to_json(lift.simplex, std::string("rectangular lift")), out_path, out);
      err << Json{{"legs", lift.spec.legs}}.dump() << '\n';
      return ok;
    }

    if (verify_cmd->parsed()) {
      config.policy = policy_from(tol);
      config.suites = {suite};
      config.timing = timing;
      const VerificationReport report = run_all(config);
      out << to_json(report, timing).dump(2) << '\n';
      return report.pass ? ok : verification_failed;
    }
  } catch (const DegeneracyError& e) {
    return error(e.what(), {{"eigenvalue_ratio", e.eigenvalue_ratio()}});
  } catch (const AdmissibilityError& e) {
    return error(e.what(), {{"mn", e.mn()}, {"bound", e.bound()}});
  } catch (const Error& e) {
    return error(e.what());
  }
  return error("no command given");
}

}  // namespace orthoplex::cli
