#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heatgraph/graph.hpp"

namespace heatgraph {

// A graph description: "builtin:<name>[?key=value&...]" or "file:<path>".
struct GraphSpec {
  enum class Kind { builtin, file };
  Kind kind = Kind::builtin;
  std::string name;  // builtin name, or the file path
  std::map<std::string, std::string> params;
};

// Throws std::invalid_argument on malformed text.
GraphSpec parse_graph_spec(const std::string& text);

// Instantiates the oracle behind a spec.  Unknown builtins, unknown or
// malformed parameters, and unreadable files are rejected.
GraphOracle generate(const GraphSpec& spec);
GraphOracle generate(const std::string& text);

// Everything one invocation needs; filled by the flag parser but usable
// directly from code.
struct RunConfig {
  std::string graph_spec;
  std::string command;      // spectrum | kernel | solve | completeness | curvature | check
  std::string check_suite;  // identities | max-principle | all

  std::optional<double> t;             // kernel, completeness
  std::vector<double> t_values;        // solve
  std::optional<VertexId> x, y, x0;    // probe vertices (default: the root)
  double tol = 1e-8;
  int max_radius = 40;
  std::optional<int> radius;           // ball radius where one is needed
  std::optional<double> curvature_bound;
  std::string u0_path;                 // solve
  std::string format = "csv";          // csv | json
  std::string out_path;                // empty = stdout
  std::uint64_t seed = 0;
  int trials = 100;
};

// Executes a parsed config.  Returns 0 (success / all checks PASS),
// 1 (computation failure or check FAIL), 2 (unusable config or input).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full argv front end (flag parsing + run).  Same exit-code contract.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heatgraph
