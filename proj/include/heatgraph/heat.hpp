#pragma once

#include <utility>
#include <vector>

#include "heatgraph/functions.hpp"
#include "heatgraph/graph.hpp"
#include "heatgraph/matrix.hpp"
#include "heatgraph/operators.hpp"
#include "heatgraph/spectral.hpp"

namespace heatgraph {

// Heat kernel of the Dirichlet restriction to a finite domain, evaluated
// through its eigendecomposition (computed once, reused for every t).
// Outside the interior the kernel is extended by zero.
class FiniteKernel {
 public:
  FiniteKernel(const GraphOracle& oracle, FiniteDomain domain);

  const FiniteDomain& domain() const { return dirichlet_.domain(); }
  const DirichletMatrix& matrix() const { return dirichlet_; }
  const SpectralDecomposition& decomposition() const { return dec_; }

  // p(t, x, y); zero whenever x or y lies outside the interior.  t >= 0.
  double evaluate(double t, VertexId x, VertexId y) const;

  // sum_y p(t, x, y); lies in [0, 1] up to roundoff.
  double row_sum(double t, VertexId x) const;

  // Dense kernel on interior x interior, indexed like the Dirichlet matrix.
  Matrix kernel_matrix(double t) const;

 private:
  DirichletMatrix dirichlet_;
  SpectralDecomposition dec_;
  std::vector<double> column_mass_;  // per eigenvector: sum of its entries
};

FiniteKernel finite_kernel(const GraphOracle& oracle, const FiniteDomain& domain);

// One kernel value followed through an exhaustion by balls around the root.
struct KernelEstimate {
  double t = 0.0;
  VertexId x = 0;
  VertexId y = 0;
  std::vector<std::pair<int, double>> trace;  // (radius, kernel value)
  double limit = 0.0;
  bool converged = false;
  double last_increment = 0.0;
  int monotonicity_violations = 0;
};

// Follows p_k(t, x, y) over balls B_k(root) until consecutive values differ
// by less than tol or max_radius is reached.  The sequence increases in k;
// decreases beyond roundoff are counted as violations.  t > 0.
KernelEstimate kernel_estimate(const GraphOracle& oracle, double t, VertexId x,
                               VertexId y, double tol = 1e-8, int max_radius = 40);

// Evolves finitely supported initial data through the Dirichlet semigroup on
// B_radius(root): u(t, x) = sum_y p_k(t, x, y) u0(y), a lower approximation
// of the full evolution for u0 >= 0.  supp(u0) must lie in the interior;
// t = 0 returns u0 unchanged.
VertexFunction evolve(const GraphOracle& oracle, const VertexFunction& u0, double t,
                      int radius);

// A multi-time evolution run; snapshot order follows the requested times.
struct HeatSolution {
  VertexFunction initial;
  int radius = 0;
  std::vector<std::pair<double, VertexFunction>> snapshots;  // (t, u(t,.))
};

HeatSolution solve_heat(const GraphOracle& oracle, const VertexFunction& u0,
                        const std::vector<double>& times, int radius);

// max |P(t+s) - P(t) P(s)| over the interior of the kernel's domain; t, s > 0.
double semigroup_check(const FiniteKernel& kernel, double t, double s);

// max |d/dt P(t) + A P(t)| with the derivative taken as a centred difference
// of width h (0 < h < t); decays like h^2.
double heat_equation_residual(const FiniteKernel& kernel, double t, double h);

// max of |Delta(P_t u0) - P_t(Delta u0)| on B_radius(root), compared at the
// sites lying at distance >= 2 from the boundary (everywhere when the ball
// swallows a finite graph whole).  u0 and its neighbors must sit in the
// interior.
double commutation_check(const GraphOracle& oracle, const VertexFunction& u0,
                         double t, int radius);

}  // namespace heatgraph
