#include "heatgraph/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatgraph/diagnostics.hpp"
#include "heatgraph/generators.hpp"
#include "heatgraph/heat.hpp"
#include "heatgraph/io.hpp"
#include "heatgraph/operators.hpp"
#include "heatgraph/spectral.hpp"

namespace heatgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

unsigned count_param(const GraphSpec& spec, const std::string& key, unsigned dflt,
                     unsigned min_value) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return dflt;
  if (!all_digits(it->second) || it->second.size() > 9)
    throw std::invalid_argument("builtin '" + spec.name + "': bad value '" + it->second +
                                "' for parameter '" + key + "'");
  const unsigned long v = std::stoul(it->second);
  if (v < min_value)
    throw std::invalid_argument("builtin '" + spec.name + "': parameter '" + key +
                                "' must be at least " + std::to_string(min_value));
  return static_cast<unsigned>(v);
}

void reject_unknown_params(const GraphSpec& spec,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.params) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end())
      throw std::invalid_argument("builtin '" + spec.name + "': unknown parameter '" +
                                  key + "'");
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

const char* elliptic_status_name(EllipticStatus s) {
  switch (s) {
    case EllipticStatus::not_subharmonic: return "not_subharmonic";
    case EllipticStatus::boundary_max: return "boundary_max";
    case EllipticStatus::constant: return "constant";
    case EllipticStatus::violation: return "violation";
  }
  return "unknown";
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  const auto bad = [&](const std::string& why) -> void {
    throw std::invalid_argument("graph spec '" + text + "': " + why +
                                " (expected builtin:<name>[?key=value&...] or file:<path>)");
  };

  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) bad("missing ':'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  GraphSpec spec;
  if (kind == "file") {
    if (rest.empty()) bad("empty path");
    spec.kind = GraphSpec::Kind::file;
    spec.name = rest;
    return spec;
  }
  if (kind != "builtin") bad("unknown kind '" + kind + "'");

  spec.kind = GraphSpec::Kind::builtin;
  const std::size_t query = rest.find('?');
  spec.name = rest.substr(0, query);
  if (spec.name.empty()) bad("empty builtin name");
  if (query == std::string::npos) return spec;

  std::string qs = rest.substr(query + 1);
  while (true) {
    const std::size_t amp = qs.find('&');
    const std::string piece = qs.substr(0, amp);
    const std::size_t eq = piece.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == piece.size())
      bad("malformed parameter '" + piece + "'");
    const std::string key = piece.substr(0, eq);
    if (!spec.params.emplace(key, piece.substr(eq + 1)).second)
      bad("duplicate parameter '" + key + "'");
    if (amp == std::string::npos) break;
    qs = qs.substr(amp + 1);
  }
  return spec;
}

GraphOracle generate(const GraphSpec& spec) {
  if (spec.kind == GraphSpec::Kind::file) return load_edge_list(spec.name);

  if (spec.name == "path_z") {
    reject_unknown_params(spec, {});
    return path_z();
  }
  if (spec.name == "lattice_z2") {
    reject_unknown_params(spec, {});
    return lattice_z2();
  }
  if (spec.name == "tree_regular") {
    reject_unknown_params(spec, {"degree"});
    return tree_regular(count_param(spec, "degree", 3, 1));
  }
  if (spec.name == "figure1") {
    reject_unknown_params(spec, {});
    return figure1();
  }
  if (spec.name == "star_growing") {
    reject_unknown_params(spec, {"arms"});
    return star_growing(count_param(spec, "arms", 3, 1));
  }
  throw std::invalid_argument("unknown builtin graph '" + spec.name + "'");
}

GraphOracle generate(const std::string& text) { return generate(parse_graph_spec(text)); }

namespace {

// ---------------------------------------------------------------------------
// Command handlers.  Each writes its artifact to os and returns the exit code.

int run_spectrum(const RunConfig& config, const GraphOracle& oracle, std::ostream& os) {
  const int radius = config.radius.value_or(5);
  const FiniteDomain dom = ball(oracle, oracle.root(), radius);
  const DirichletMatrix dm = dirichlet_matrix(oracle, dom);
  const SpectralDecomposition dec = eigensolve(dm);

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "spectrum";
    doc["graph"] = config.graph_spec;
    doc["radius"] = radius;
    doc["interior"] = dom.interior_size();
    doc["boundary"] = dom.boundary().size();
    doc["eigenvalues"] = dec.eigenvalues;
    doc["lambda0"] = dec.eigenvalues.front();
    doc["residual"] = dec.residual;
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=spectrum graph=" << config.graph_spec << " radius=" << radius
       << " interior=" << dom.interior_size() << " boundary=" << dom.boundary().size()
       << " lambda0=" << format_double(dec.eigenvalues.front())
       << " residual=" << format_double(dec.residual) << '\n';
    os << "j,eigenvalue\n";
    for (std::size_t j = 0; j < dec.eigenvalues.size(); ++j)
      os << j << ',' << format_double(dec.eigenvalues[j]) << '\n';
  }
  return 0;
}

int run_kernel(const RunConfig& config, const GraphOracle& oracle, std::ostream& os) {
  const VertexId x = config.x.value_or(oracle.root());
  const VertexId y = config.y.value_or(oracle.root());
  const KernelEstimate est =
      kernel_estimate(oracle, *config.t, x, y, config.tol, config.max_radius);

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "kernel";
    doc["graph"] = config.graph_spec;
    doc["t"] = est.t;
    doc["x"] = est.x;
    doc["y"] = est.y;
    ordered_json trace = ordered_json::array();
    for (const auto& [radius, value] : est.trace)
      trace.push_back(ordered_json{{"radius", radius}, {"value", value}});
    doc["trace"] = std::move(trace);
    doc["limit"] = est.limit;
    doc["converged"] = est.converged;
    doc["last_increment"] = est.last_increment;
    doc["monotonicity_violations"] = est.monotonicity_violations;
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=kernel graph=" << config.graph_spec << " t=" << format_double(est.t)
       << " x=" << est.x << " y=" << est.y << " tol=" << format_double(config.tol)
       << " max_radius=" << config.max_radius << '\n';
    os << "# limit=" << format_double(est.limit)
       << " converged=" << bool_text(est.converged)
       << " last_increment=" << format_double(est.last_increment)
       << " monotonicity_violations=" << est.monotonicity_violations << '\n';
    os << "k,radius,p_k\n";
    for (std::size_t k = 0; k < est.trace.size(); ++k)
      os << k << ',' << est.trace[k].first << ',' << format_double(est.trace[k].second)
         << '\n';
  }
  return est.monotonicity_violations == 0 ? 0 : 1;
}

int run_solve(const RunConfig& config, const GraphOracle& oracle,
              const VertexFunction& u0, std::ostream& os) {
  const int radius = config.radius.value_or(10);
  const HeatSolution sol = solve_heat(oracle, u0, config.t_values, radius);

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "solve";
    doc["graph"] = config.graph_spec;
    doc["radius"] = sol.radius;
    doc["u0"] = config.u0_path;
    ordered_json snaps = ordered_json::array();
    for (const auto& [t, u] : sol.snapshots) {
      ordered_json snap;
      snap["t"] = t;
      snap["sup"] = u.sup_norm();
      snap["mass"] = u.sum();
      ordered_json values = ordered_json::array();
      for (const auto& [v, val] : u.entries())
        values.push_back(ordered_json{{"vertex", v}, {"value", val}});
      snap["values"] = std::move(values);
      snaps.push_back(std::move(snap));
    }
    doc["snapshots"] = std::move(snaps);
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=solve graph=" << config.graph_spec << " radius=" << sol.radius
       << " u0=" << config.u0_path << '\n';
    for (const auto& [t, u] : sol.snapshots)
      os << "# t=" << format_double(t) << " sup=" << format_double(u.sup_norm())
         << " mass=" << format_double(u.sum()) << '\n';
    os << "t,vertex,value\n";
    for (const auto& [t, u] : sol.snapshots)
      for (const auto& [v, val] : u.entries())
        os << format_double(t) << ',' << v << ',' << format_double(val) << '\n';
  }
  return 0;
}

int run_completeness(const RunConfig& config, const GraphOracle& oracle,
                     std::ostream& os) {
  const VertexId x = config.x.value_or(oracle.root());
  const CompletenessEstimate est =
      completeness_estimate(oracle, *config.t, x, config.tol, config.max_radius);

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "completeness";
    doc["graph"] = config.graph_spec;
    doc["t"] = est.t;
    doc["x"] = est.x;
    ordered_json trace = ordered_json::array();
    for (const auto& [radius, mass] : est.trace)
      trace.push_back(ordered_json{{"radius", radius}, {"mass", mass}});
    doc["trace"] = std::move(trace);
    doc["limit"] = est.limit;
    doc["defect"] = est.defect();
    doc["converged"] = est.converged;
    doc["monotonicity_violations"] = est.monotonicity_violations;
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=completeness graph=" << config.graph_spec
       << " t=" << format_double(est.t) << " x=" << est.x
       << " tol=" << format_double(config.tol) << " max_radius=" << config.max_radius
       << '\n';
    os << "# limit=" << format_double(est.limit) << " defect=" << format_double(est.defect())
       << " converged=" << bool_text(est.converged)
       << " monotonicity_violations=" << est.monotonicity_violations << '\n';
    os << "k,radius,mass\n";
    for (std::size_t k = 0; k < est.trace.size(); ++k)
      os << k << ',' << est.trace[k].first << ',' << format_double(est.trace[k].second)
         << '\n';
  }
  return est.monotonicity_violations == 0 ? 0 : 1;
}

int run_curvature(const RunConfig& config, const GraphOracle& oracle, std::ostream& os) {
  const VertexId x0 = config.x0.value_or(oracle.root());
  const int radius = config.radius.value_or(10);
  const CurvatureReport rep = curvature_scan(oracle, x0, radius, config.curvature_bound);

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "curvature";
    doc["graph"] = config.graph_spec;
    doc["x0"] = rep.root;
    doc["radius"] = rep.radius;
    doc["min_delta"] = rep.min_delta;
    if (rep.bound) doc["bound"] = *rep.bound;
    doc["violations"] = rep.violations;
    ordered_json entries = ordered_json::array();
    for (const CurvatureEntry& e : rep.entries)
      entries.push_back(ordered_json{
          {"vertex", e.vertex}, {"distance", e.distance}, {"delta", e.delta}});
    doc["entries"] = std::move(entries);
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=curvature graph=" << config.graph_spec << " x0=" << rep.root
       << " radius=" << rep.radius << " min_delta=" << rep.min_delta << " bound="
       << (rep.bound ? format_double(*rep.bound) : std::string("none"))
       << " violations=" << rep.violations.size() << '\n';
    os << "vertex,distance,delta\n";
    for (const CurvatureEntry& e : rep.entries)
      os << e.vertex << ',' << e.distance << ',' << e.delta << '\n';
  }
  return rep.bound && !rep.violations.empty() ? 1 : 0;
}

int run_check(const RunConfig& config, const GraphOracle& oracle, std::ostream& os) {
  const int radius = config.radius.value_or(3);
  const bool with_identities =
      config.check_suite == "identities" || config.check_suite == "all";
  const bool with_max =
      config.check_suite == "max-principle" || config.check_suite == "all";

  bool all_passed = true;
  ordered_json results = ordered_json::array();
  std::string text;

  if (with_identities) {
    const IdentityReport rep = identity_battery(oracle, radius, config.trials, config.seed);
    all_passed = all_passed && rep.passed();
    text += std::string(rep.passed() ? "PASS" : "FAIL") +
            " identities trials=" + std::to_string(rep.trials) +
            " worst_green=" + format_double(rep.worst_green) +
            " worst_symmetry=" + format_double(rep.worst_symmetry) +
            " worst_adjacency=" + format_double(rep.worst_adjacency) +
            " tol=" + format_double(rep.tolerance) + "\n";
    results.push_back(ordered_json{{"name", "identities"},
                                   {"passed", rep.passed()},
                                   {"trials", rep.trials},
                                   {"worst_green", rep.worst_green},
                                   {"worst_symmetry", rep.worst_symmetry},
                                   {"worst_adjacency", rep.worst_adjacency},
                                   {"tolerance", rep.tolerance}});
  }

  if (with_max) {
    const FiniteDomain dom = ball(oracle, oracle.root(), radius);
    const ParabolicReport parabolic =
        verify_parabolic_max_principle(oracle, dom, config.trials, 2.0, config.seed);
    all_passed = all_passed && parabolic.passed();
    text += std::string(parabolic.passed() ? "PASS" : "FAIL") +
            " parabolic-max-principle trials=" + std::to_string(parabolic.trials) +
            " violations=" + std::to_string(parabolic.violations.size()) +
            " grid_points=" + std::to_string(parabolic.grid_points) + "\n";
    ordered_json pwit = ordered_json::array();
    for (const ParabolicViolation& v : parabolic.violations)
      pwit.push_back(ordered_json{{"trial", v.trial},
                                  {"t", v.t},
                                  {"vertex", v.vertex},
                                  {"value", v.value},
                                  {"bound", v.bound}});
    results.push_back(ordered_json{{"name", "parabolic-max-principle"},
                                   {"passed", parabolic.passed()},
                                   {"trials", parabolic.trials},
                                   {"grid_points", parabolic.grid_points},
                                   {"witnesses", std::move(pwit)}});

    const EllipticSuiteReport elliptic =
        run_elliptic_trials(oracle, dom, config.trials, config.seed + 1);
    all_passed = all_passed && elliptic.passed();
    text += std::string(elliptic.passed() ? "PASS" : "FAIL") +
            " elliptic-max-principle trials=" + std::to_string(elliptic.trials) +
            " unexpected=" + std::to_string(elliptic.unexpected.size()) + "\n";
    ordered_json ewit = ordered_json::array();
    for (const auto& [trial, status] : elliptic.unexpected)
      ewit.push_back(
          ordered_json{{"trial", trial}, {"status", elliptic_status_name(status)}});
    results.push_back(ordered_json{{"name", "elliptic-max-principle"},
                                   {"passed", elliptic.passed()},
                                   {"trials", elliptic.trials},
                                   {"witnesses", std::move(ewit)}});
  }

  if (config.format == "json") {
    ordered_json doc;
    doc["command"] = "check";
    doc["suite"] = config.check_suite;
    doc["graph"] = config.graph_spec;
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    doc["radius"] = radius;
    doc["results"] = std::move(results);
    doc["passed"] = all_passed;
    os << doc.dump(2) << '\n';
  } else {
    os << "# command=check suite=" << config.check_suite << " graph=" << config.graph_spec
       << " seed=" << config.seed << " trials=" << config.trials << " radius=" << radius
       << '\n';
    os << text;
    os << (all_passed ? "PASS" : "FAIL") << '\n';
  }
  return all_passed ? 0 : 1;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return 2;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands{"spectrum", "kernel", "solve",
                                                 "completeness", "curvature", "check"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end())
    return usage_error(err, "unknown command '" + config.command + "'");
  if (config.format != "csv" && config.format != "json")
    return usage_error(err, "--format must be csv or json");
  if (!(config.tol > 0.0)) return usage_error(err, "--tol must be positive");
  if (config.max_radius < 1) return usage_error(err, "--max-radius must be at least 1");
  if (config.radius && *config.radius < 1)
    return usage_error(err, "--radius must be at least 1");
  if (config.trials < 1) return usage_error(err, "--trials must be at least 1");

  if (config.command == "kernel" || config.command == "completeness") {
    if (!config.t) return usage_error(err, config.command + " requires --t");
    if (!std::isfinite(*config.t) || !(*config.t > 0.0))
      return usage_error(err, "--t must be finite and positive");
  }
  if (config.command == "solve") {
    if (config.u0_path.empty()) return usage_error(err, "solve requires --u0");
    if (config.t_values.empty()) return usage_error(err, "solve requires --t");
    for (double t : config.t_values)
      if (!std::isfinite(t) || t < 0.0)
        return usage_error(err, "solve times must be finite and non-negative");
  }
  if (config.command == "check" && config.check_suite != "identities" &&
      config.check_suite != "max-principle" && config.check_suite != "all")
    return usage_error(err, "check suite must be identities, max-principle, or all");

  // Input phase: everything here is the caller's data, so failures are
  // usage errors.
  std::optional<GraphOracle> oracle;
  VertexFunction u0;
  try {
    oracle.emplace(generate(config.graph_spec));
    if (config.command == "solve") u0 = load_vertex_function(config.u0_path);
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  std::ofstream file_out;
  if (!config.out_path.empty()) {
    file_out.open(config.out_path);
    if (!file_out) return usage_error(err, "cannot open output file '" + config.out_path + "'");
  }
  std::ostream& os = config.out_path.empty() ? out : file_out;

  try {
    if (config.command == "spectrum") return run_spectrum(config, *oracle, os);
    if (config.command == "kernel") return run_kernel(config, *oracle, os);
    if (config.command == "solve") return run_solve(config, *oracle, u0, os);
    if (config.command == "completeness") return run_completeness(config, *oracle, os);
    if (config.command == "curvature") return run_curvature(config, *oracle, os);
    return run_check(config, *oracle, os);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (residual "
        << format_double(e.achieved_residual) << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.check_suite = "all";

  CLI::App app{"Heat kernel and heat flow of the physical (unbounded) graph Laplacian"};
  app.name("heatgraph");
  app.require_subcommand(1);

  app.add_option("--graph", config.graph_spec,
                 "graph spec: builtin:<name>[?key=value&...] or file:<path>")
      ->required();
  app.add_option("--format", config.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out_path, "write the artifact to this path");
  app.add_option("--seed", config.seed, "seed for randomized checks (default 0)");
  app.add_option("--tol", config.tol, "convergence tolerance (default 1e-8)");
  app.add_option("--max-radius", config.max_radius,
                 "largest exhaustion radius (default 40)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Dirichlet eigenvalues of a ball");
  spectrum->add_option("--radius", config.radius, "ball radius (default 5)");

  CLI::App* kernel = app.add_subcommand("kernel", "heat-kernel exhaustion trace");
  kernel->add_option("--t", config.t, "time (required, > 0)")->required();
  kernel->add_option("--x", config.x, "first vertex id (default: root)");
  kernel->add_option("--y", config.y, "second vertex id (default: root)");

  CLI::App* solve = app.add_subcommand("solve", "evolve initial data from a CSV file");
  solve->add_option("--u0", config.u0_path, "CSV file with header vertex,value")
      ->required();
  solve->add_option("--t", config.t_values, "comma-separated times (>= 0)")
      ->required()
      ->delimiter(',');
  solve->add_option("--radius", config.radius, "ball radius (default 10)");

  CLI::App* completeness =
      app.add_subcommand("completeness", "heat-kernel mass exhaustion trace");
  completeness->add_option("--t", config.t, "time (required, > 0)")->required();
  completeness->add_option("--x", config.x, "vertex id (default: root)");

  CLI::App* curvature = app.add_subcommand("curvature", "scan of Delta d(., x0)");
  curvature->add_option("--x0", config.x0, "center vertex id (default: root)");
  curvature->add_option("--radius", config.radius, "scan radius (default 10)");
  curvature->add_option("--bound", config.curvature_bound,
                        "assert Delta d >= bound and fail on violations");

  CLI::App* check = app.add_subcommand("check", "verification suites");
  check
      ->add_option("suite", config.check_suite,
                   "identities | max-principle | all (default all)")
      ->check(CLI::IsMember({"identities", "max-principle", "all"}));
  check->add_option("--trials", config.trials, "randomized trials (default 100)");
  check->add_option("--radius", config.radius, "window/domain ball radius (default 3)");

  for (CLI::App* sub : {spectrum, kernel, solve, completeness, curvature, check})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  config.command = app.get_subcommands().at(0)->get_name();
  return run(config, out, err);
}

}  // namespace heatgraph
