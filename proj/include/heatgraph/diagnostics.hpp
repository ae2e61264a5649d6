#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heatgraph/functions.hpp"
#include "heatgraph/graph.hpp"

namespace heatgraph {

// ---------------------------------------------------------------------------
// Curvature-type bound: Delta d(., x0) >= -C.

struct CurvatureEntry {
  VertexId vertex = 0;
  int distance = 0;
  long long delta = 0;  // Delta d(., x0) at the vertex; an exact integer
};

struct CurvatureReport {
  VertexId root = 0;
  int radius = 0;
  std::vector<CurvatureEntry> entries;  // sorted by (distance, vertex)
  long long min_delta = 0;
  std::optional<double> bound;          // asserted lower bound, if any
  std::vector<VertexId> violations;     // vertices with delta < bound

  bool satisfied() const { return violations.empty(); }
};

// Exact integer Delta d(x, x0) for every x in B_radius(x0).  Distances come
// from BFS out to radius+1, so each scanned vertex has all neighbor
// distances available.  A supplied bound marks vertices falling below it.
CurvatureReport curvature_scan(const GraphOracle& oracle, VertexId x0, int radius,
                               std::optional<double> bound = std::nullopt);

// ---------------------------------------------------------------------------
// Stochastic completeness: does the kernel mass reach 1?

struct CompletenessEstimate {
  double t = 0.0;
  VertexId x = 0;
  std::vector<std::pair<int, double>> trace;  // (radius, mass)
  double limit = 0.0;                         // final mass, a lower bound
  bool converged = false;
  double last_increment = 0.0;
  int monotonicity_violations = 0;

  double defect() const { return 1.0 - limit; }
};

// Follows sum_y p_k(t, x, y) over balls B_k(root).  The masses increase in k
// and never exceed 1; the final value certifies a lower bound on the true
// kernel mass (mass = 1 means heat is conserved).  t > 0.
CompletenessEstimate completeness_estimate(const GraphOracle& oracle, double t,
                                           VertexId x, double tol = 1e-8,
                                           int max_radius = 40);

// sum_x u(t, x) - sum_x u0(x) on B_radius(root); <= 0 for u0 >= 0 (Dirichlet
// loss), and -> 0 with the radius exactly when heat is conserved.  t > 0.
double mass_conservation_check(const GraphOracle& oracle, const VertexFunction& u0,
                               double t, int radius);

// sup |u(t, .)| - sup |u0|; the semigroup never amplifies the sup norm.
double uniqueness_bound_check(const GraphOracle& oracle, const VertexFunction& u0,
                              double t, int radius);

// ---------------------------------------------------------------------------
// Maximum principles.

struct ParabolicViolation {
  int trial = 0;
  double t = 0.0;
  VertexId vertex = 0;
  double value = 0.0;
  double bound = 0.0;
};

struct ParabolicReport {
  int trials = 0;
  int grid_points = 0;
  std::vector<ParabolicViolation> violations;

  bool passed() const { return violations.empty(); }
};

// Evolves random boundary-zero data on the domain and checks that u(t, x)
// never exceeds its parabolic-boundary maximum, max(max u0, 0), on a t-grid
// over [0, T].  Near-misses trigger a refined grid before they count.
ParabolicReport verify_parabolic_max_principle(const GraphOracle& oracle,
                                               const FiniteDomain& domain, int trials,
                                               double T, std::uint64_t seed = 0);

enum class EllipticStatus { not_subharmonic, boundary_max, constant, violation };

struct EllipticReport {
  EllipticStatus status = EllipticStatus::boundary_max;
  std::optional<VertexId> witness;  // offending vertex, when there is one
  double interior_max = 0.0;
  double domain_max = 0.0;
};

// For f defined on all of the domain with Delta f <= 0 on the interior: the
// maximum over the domain is attained on the boundary unless f is constant.
// Reports not_subharmonic instead of judging when the hypothesis fails.
EllipticReport verify_elliptic_max_principle(const GraphOracle& oracle,
                                             const FiniteDomain& domain,
                                             const VertexFunction& f);

struct EllipticSuiteReport {
  int trials = 0;
  std::vector<std::pair<int, EllipticStatus>> unexpected;  // (trial, status)

  bool passed() const { return unexpected.empty(); }
};

// Feeds the elliptic verifier with constructed subharmonic samples: strict
// Dirichlet solves (Delta f < 0 inside, zero boundary) alternating with
// harmonic extensions of random boundary data.  Every sample must land on
// boundary_max or constant.
EllipticSuiteReport run_elliptic_trials(const GraphOracle& oracle,
                                        const FiniteDomain& domain, int trials,
                                        std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Structural identity battery (used by `heatgraph check identities`).

struct IdentityReport {
  int trials = 0;
  double worst_green = 0.0;      // |(df, dg) - <Delta f, g>|, normalized
  double worst_symmetry = 0.0;   // |<Delta f, g> - <f, Delta g>|, normalized
  double worst_adjacency = 0.0;  // |Delta f + A f - m f|, normalized
  double tolerance = 0.0;

  bool passed() const {
    return worst_green <= tolerance && worst_symmetry <= tolerance &&
           worst_adjacency <= tolerance;
  }
};

// Random finitely supported f, g inside B_window(root); checks Green's
// identity, symmetry of the Laplacian, and Delta = M - A.  Discrepancies are
// normalized by 1 + ||f|| ||g||.
IdentityReport identity_battery(const GraphOracle& oracle, int window_radius,
                                int trials, std::uint64_t seed = 0);

}  // namespace heatgraph
