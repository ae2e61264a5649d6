#pragma once

#include <stdexcept>
#include <string>

namespace heatgraph {

// Violation of the structural graph contract: asymmetric adjacency,
// self-loops, unreachable vertices, exploration-cap breaches.
class GraphStructureError : public std::runtime_error {
 public:
  explicit GraphStructureError(const std::string& what)
      : std::runtime_error(what) {}
};

// An iteration failed to reach its target accuracy; carries the residual
// that was actually achieved.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_residual(achieved) {}

  double achieved_residual;
};

}  // namespace heatgraph
