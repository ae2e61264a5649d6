#include "heatgraph/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatgraph {

namespace {

void require_time(double t, const char* where) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument(std::string(where) + ": time must be finite and non-negative");
}

void require_positive_time(double t, const char* where) {
  if (!std::isfinite(t) || !(t > 0.0))
    throw std::invalid_argument(std::string(where) + ": time must be finite and positive");
}

// e^{-t Delta_U} f on the interior, through the eigenbasis.  The caller has
// already checked that supp(f) lies in the interior.
VertexFunction evolve_on(const FiniteKernel& kernel, const VertexFunction& f, double t) {
  const FiniteDomain& dom = kernel.domain();
  const SpectralDecomposition& dec = kernel.decomposition();
  const std::size_t n = dom.interior_size();

  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = f.value(dom.interior_vertex(i));

  std::vector<double> coeff(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += dec.eigenvectors(i, j) * rhs[i];
    coeff[j] = c * std::exp(-dec.eigenvalues[j] * t);
  }

  VertexFunction out;
  for (std::size_t i = 0; i < n; ++i) {
    double u = 0.0;
    for (std::size_t j = 0; j < n; ++j) u += dec.eigenvectors(i, j) * coeff[j];
    out.set(dom.interior_vertex(i), u);
  }
  return out;
}

void require_interior_support(const FiniteDomain& dom, const VertexFunction& f,
                              const char* where) {
  for (const auto& [v, val] : f.entries())
    if (val != 0.0 && !dom.is_interior(v))
      throw std::domain_error(std::string(where) +
                              ": initial data is not supported in the interior");
}

}  // namespace

FiniteKernel::FiniteKernel(const GraphOracle& oracle, FiniteDomain domain)
    : dirichlet_(oracle, std::move(domain)), dec_(eigensolve(dirichlet_)) {
  const std::size_t n = dec_.size();
  column_mass_.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += dec_.eigenvectors(i, j);
    column_mass_[j] = s;
  }
}

FiniteKernel finite_kernel(const GraphOracle& oracle, const FiniteDomain& domain) {
  return FiniteKernel(oracle, domain);
}

double FiniteKernel::evaluate(double t, VertexId x, VertexId y) const {
  require_time(t, "FiniteKernel::evaluate");
  const auto ix = domain().interior_index(x);
  const auto iy = domain().interior_index(y);
  if (!ix || !iy) return 0.0;
  double p = 0.0;
  for (std::size_t j = 0; j < dec_.size(); ++j)
    p += std::exp(-dec_.eigenvalues[j] * t) * dec_.eigenvectors(*ix, j) *
         dec_.eigenvectors(*iy, j);
  return p;
}

double FiniteKernel::row_sum(double t, VertexId x) const {
  require_time(t, "FiniteKernel::row_sum");
  const auto ix = domain().interior_index(x);
  if (!ix) return 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < dec_.size(); ++j)
    s += std::exp(-dec_.eigenvalues[j] * t) * dec_.eigenvectors(*ix, j) * column_mass_[j];
  return s;
}

Matrix FiniteKernel::kernel_matrix(double t) const {
  require_time(t, "FiniteKernel::kernel_matrix");
  const std::size_t n = dec_.size();
  Matrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::exp(-dec_.eigenvalues[j] * t);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = e * dec_.eigenvectors(i, j);
      if (a == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) p(i, k) += a * dec_.eigenvectors(k, j);
    }
  }
  return p;
}

KernelEstimate kernel_estimate(const GraphOracle& oracle, double t, VertexId x,
                               VertexId y, double tol, int max_radius) {
  require_positive_time(t, "kernel_estimate");
  if (!(tol > 0.0)) throw std::invalid_argument("kernel_estimate: tol must be positive");
  if (max_radius < 1)
    throw std::invalid_argument("kernel_estimate: max_radius must be at least 1");

  KernelEstimate est;
  est.t = t;
  est.x = x;
  est.y = y;

  double prev = 0.0;
  for (int k = 1; k <= max_radius; ++k) {
    FiniteDomain dom = ball(oracle, oracle.root(), k);
    if (!dom.is_interior(x) || !dom.is_interior(y)) {
      if (!est.trace.empty())
        throw GraphStructureError("kernel_estimate: exhaustion lost an interior vertex");
      continue;
    }
    FiniteKernel kernel(oracle, std::move(dom));
    const double val = kernel.evaluate(t, x, y);
    const bool have_prev = !est.trace.empty();
    est.trace.emplace_back(k, val);
    est.limit = val;
    if (have_prev) {
      const double inc = val - prev;
      est.last_increment = inc;
      if (inc < -1e-12 * (1.0 + std::abs(prev))) ++est.monotonicity_violations;
      if (std::abs(inc) < tol) {
        est.converged = true;
        break;
      }
    }
    prev = val;
  }
  if (est.trace.empty())
    throw std::domain_error(
        "kernel_estimate: the requested vertices never become interior within max_radius");
  return est;
}

VertexFunction evolve(const GraphOracle& oracle, const VertexFunction& u0, double t,
                      int radius) {
  require_time(t, "evolve");
  if (radius < 1) throw std::invalid_argument("evolve: radius must be at least 1");
  FiniteDomain dom = ball(oracle, oracle.root(), radius);
  require_interior_support(dom, u0, "evolve");
  if (t == 0.0) return u0;
  FiniteKernel kernel(oracle, std::move(dom));
  return evolve_on(kernel, u0, t);
}

HeatSolution solve_heat(const GraphOracle& oracle, const VertexFunction& u0,
                        const std::vector<double>& times, int radius) {
  if (radius < 1) throw std::invalid_argument("solve_heat: radius must be at least 1");
  for (double t : times) require_time(t, "solve_heat");
  FiniteDomain dom = ball(oracle, oracle.root(), radius);
  require_interior_support(dom, u0, "solve_heat");

  HeatSolution sol;
  sol.initial = u0;
  sol.radius = radius;
  FiniteKernel kernel(oracle, std::move(dom));
  for (double t : times)
    sol.snapshots.emplace_back(t, t == 0.0 ? u0 : evolve_on(kernel, u0, t));
  return sol;
}

double semigroup_check(const FiniteKernel& kernel, double t, double s) {
  require_positive_time(t, "semigroup_check");
  require_positive_time(s, "semigroup_check");
  const Matrix lhs = kernel.kernel_matrix(t + s);
  const Matrix rhs = kernel.kernel_matrix(t) * kernel.kernel_matrix(s);
  return max_abs_diff(lhs, rhs);
}

double heat_equation_residual(const FiniteKernel& kernel, double t, double h) {
  if (!std::isfinite(t) || !std::isfinite(h) || !(h > 0.0) || !(t > h))
    throw std::invalid_argument("heat_equation_residual: need t > h > 0");
  Matrix d = kernel.kernel_matrix(t + h);
  d -= kernel.kernel_matrix(t - h);
  d *= 1.0 / (2.0 * h);
  d += kernel.matrix().dense() * kernel.kernel_matrix(t);
  return d.max_abs();
}

double commutation_check(const GraphOracle& oracle, const VertexFunction& u0,
                         double t, int radius) {
  require_time(t, "commutation_check");
  if (radius < 1) throw std::invalid_argument("commutation_check: radius must be at least 1");
  FiniteDomain dom = ball(oracle, oracle.root(), radius);

  // u0 and all of its neighbors must be interior, so Delta u0 restricted to
  // the interior coincides with the Dirichlet image of u0.
  for (const auto& [v, val] : u0.entries()) {
    if (val == 0.0) continue;
    if (!dom.is_interior(v))
      throw std::domain_error("commutation_check: initial data touches the boundary");
    for (VertexId y : oracle.neighbors(v))
      if (!dom.is_interior(y))
        throw std::domain_error(
            "commutation_check: a neighbor of the initial data touches the boundary");
  }

  FiniteKernel kernel(oracle, dom);
  const VertexFunction du0 = laplacian_apply(oracle, u0);
  const VertexFunction after =
      laplacian_apply(oracle, t == 0.0 ? u0 : evolve_on(kernel, u0, t));
  const VertexFunction before = t == 0.0 ? du0 : evolve_on(kernel, du0, t);

  double worst = 0.0;
  for (VertexId v : dom.interior()) {
    bool deep = true;
    for (VertexId y : oracle.neighbors(v))
      if (!dom.is_interior(y)) {
        deep = false;
        break;
      }
    if (!deep) continue;
    worst = std::max(worst, std::abs(after.value(v) - before.value(v)));
  }
  return worst;
}

}  // namespace heatgraph
