#include "heatgraph/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "heatgraph/heat.hpp"
#include "heatgraph/operators.hpp"
#include "heatgraph/random.hpp"
#include "heatgraph/spectral.hpp"

namespace heatgraph {

namespace {

// u(t, .) on the interior from precomputed spectral data.
std::vector<double> evolve_vector(const SpectralDecomposition& dec,
                                  const std::vector<double>& u0, double t) {
  const std::size_t n = dec.size();
  std::vector<double> coeff(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += dec.eigenvectors(i, j) * u0[i];
    coeff[j] = c * std::exp(-dec.eigenvalues[j] * t);
  }
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += dec.eigenvectors(i, j) * coeff[j];
    u[i] = s;
  }
  return u;
}

}  // namespace

CurvatureReport curvature_scan(const GraphOracle& oracle, VertexId x0, int radius,
                               std::optional<double> bound) {
  if (radius < 1) throw std::invalid_argument("curvature_scan: radius must be at least 1");
  const auto dist = bfs_distances(oracle, x0, radius + 1);

  CurvatureReport report;
  report.root = x0;
  report.radius = radius;
  report.bound = bound;

  for (const auto& [v, d] : dist) {
    if (d > radius) continue;
    long long delta = static_cast<long long>(oracle.valence(v)) * d;
    for (VertexId y : oracle.neighbors(v)) {
      const auto it = dist.find(y);
      if (it == dist.end())
        throw GraphStructureError("curvature_scan: neighbor escaped the explored ball");
      delta -= it->second;
    }
    report.entries.push_back({v, d, delta});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const CurvatureEntry& a, const CurvatureEntry& b) {
              return a.distance != b.distance ? a.distance < b.distance
                                              : a.vertex < b.vertex;
            });

  report.min_delta = report.entries.front().delta;
  for (const CurvatureEntry& e : report.entries) {
    report.min_delta = std::min(report.min_delta, e.delta);
    if (bound && static_cast<double>(e.delta) < *bound) report.violations.push_back(e.vertex);
  }
  return report;
}

CompletenessEstimate completeness_estimate(const GraphOracle& oracle, double t,
                                           VertexId x, double tol, int max_radius) {
  if (!std::isfinite(t) || !(t > 0.0))
    throw std::invalid_argument("completeness_estimate: time must be finite and positive");
  if (!(tol > 0.0))
    throw std::invalid_argument("completeness_estimate: tol must be positive");
  if (max_radius < 1)
    throw std::invalid_argument("completeness_estimate: max_radius must be at least 1");

  CompletenessEstimate est;
  est.t = t;
  est.x = x;

  double prev = 0.0;
  for (int k = 1; k <= max_radius; ++k) {
    FiniteDomain dom = ball(oracle, oracle.root(), k);
    if (!dom.is_interior(x)) {
      if (!est.trace.empty())
        throw GraphStructureError("completeness_estimate: exhaustion lost an interior vertex");
      continue;
    }
    FiniteKernel kernel(oracle, std::move(dom));
    const double mass = kernel.row_sum(t, x);
    const bool have_prev = !est.trace.empty();
    est.trace.emplace_back(k, mass);
    est.limit = mass;
    if (have_prev) {
      const double inc = mass - prev;
      est.last_increment = inc;
      if (inc < -1e-12 * (1.0 + std::abs(prev))) ++est.monotonicity_violations;
      if (std::abs(inc) < tol) {
        est.converged = true;
        break;
      }
    }
    prev = mass;
  }
  if (est.trace.empty())
    throw std::domain_error(
        "completeness_estimate: the vertex never becomes interior within max_radius");
  return est;
}

double mass_conservation_check(const GraphOracle& oracle, const VertexFunction& u0,
                               double t, int radius) {
  if (!std::isfinite(t) || !(t > 0.0))
    throw std::invalid_argument("mass_conservation_check: time must be finite and positive");
  return evolve(oracle, u0, t, radius).sum() - u0.sum();
}

double uniqueness_bound_check(const GraphOracle& oracle, const VertexFunction& u0,
                              double t, int radius) {
  return evolve(oracle, u0, t, radius).sup_norm() - u0.sup_norm();
}

ParabolicReport verify_parabolic_max_principle(const GraphOracle& oracle,
                                               const FiniteDomain& domain, int trials,
                                               double T, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_parabolic_max_principle: trials >= 1");
  if (!std::isfinite(T) || !(T > 0.0))
    throw std::invalid_argument("verify_parabolic_max_principle: T must be positive");

  const FiniteKernel kernel(oracle, domain);
  const SpectralDecomposition& dec = kernel.decomposition();
  const std::size_t n = domain.interior_size();

  ParabolicReport report;
  report.trials = trials;
  report.grid_points = 66;

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> u0(n);
    double bound = 0.0;  // boundary data is zero, so the parabolic boundary
                         // maximum is max(max u0, 0)
    for (std::size_t i = 0; i < n; ++i) {
      u0[i] = detail::symmetric_uniform(rng);
      bound = std::max(bound, u0[i]);
    }

    const auto grid_max = [&](int points, double* bad_t, std::size_t* bad_i,
                              double* bad_v) {
      double worst = -std::numeric_limits<double>::infinity();
      for (int g = 0; g <= points; ++g) {
        const double t = T * g / points;
        const std::vector<double> u = g == 0 ? u0 : evolve_vector(dec, u0, t);
        for (std::size_t i = 0; i < n; ++i) {
          if (u[i] > worst) {
            worst = u[i];
            *bad_t = t;
            *bad_i = i;
            *bad_v = u[i];
          }
        }
      }
      return worst;
    };

    double bad_t = 0.0, bad_v = 0.0;
    std::size_t bad_i = 0;
    double worst = grid_max(65, &bad_t, &bad_i, &bad_v);
    if (worst > bound + 1e-12) {
      // Near-violation: refine the grid before judging.
      report.grid_points = 1026;
      worst = grid_max(1025, &bad_t, &bad_i, &bad_v);
      if (worst > bound + 1e-9)
        report.violations.push_back(
            {trial, bad_t, domain.interior_vertex(bad_i), bad_v, bound});
    }
  }
  return report;
}

EllipticReport verify_elliptic_max_principle(const GraphOracle& oracle,
                                             const FiniteDomain& domain,
                                             const VertexFunction& f) {
  for (VertexId v : domain.vertices())
    if (!f.entries().count(v))
      throw std::invalid_argument(
          "verify_elliptic_max_principle: f must be defined on the whole domain");

  EllipticReport report;
  const double scale = 1.0 + f.sup_norm();
  const double eps = 1e-12 * scale;

  // Subharmonicity on the interior (all neighbors lie in the domain there).
  for (VertexId x : domain.interior()) {
    const auto& nbrs = oracle.neighbors(x);
    double lap = static_cast<double>(nbrs.size()) * f.value(x);
    for (VertexId y : nbrs) lap -= f.value(y);
    if (lap > 1e-11 * static_cast<double>(1 + nbrs.size()) * scale) {
      report.status = EllipticStatus::not_subharmonic;
      report.witness = x;
      return report;
    }
  }

  double domain_max = -std::numeric_limits<double>::infinity();
  for (VertexId v : domain.vertices()) domain_max = std::max(domain_max, f.value(v));
  double interior_max = -std::numeric_limits<double>::infinity();
  VertexId interior_argmax = 0;
  for (VertexId v : domain.interior())
    if (f.value(v) > interior_max) {
      interior_max = f.value(v);
      interior_argmax = v;
    }
  report.domain_max = domain_max;
  report.interior_max = interior_max;

  for (VertexId v : domain.boundary())
    if (f.value(v) >= domain_max - eps) {
      report.status = EllipticStatus::boundary_max;
      return report;
    }

  if (domain.interior().empty()) {  // nothing to attain the maximum
    report.status = EllipticStatus::boundary_max;
    return report;
  }

  // The maximum lives strictly inside.  The principle then demands that f is
  // constant on the maximizer's component within the domain.
  std::unordered_set<VertexId> seen{interior_argmax};
  std::deque<VertexId> queue{interior_argmax};
  bool component_constant = true;
  while (!queue.empty() && component_constant) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (std::abs(f.value(v) - domain_max) > eps) component_constant = false;
    for (VertexId y : oracle.neighbors(v))
      if (domain.contains(y) && seen.insert(y).second) queue.push_back(y);
  }

  if (component_constant) {
    report.status = EllipticStatus::constant;
  } else {
    report.status = EllipticStatus::violation;
    report.witness = interior_argmax;
  }
  return report;
}

EllipticSuiteReport run_elliptic_trials(const GraphOracle& oracle,
                                        const FiniteDomain& domain, int trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_elliptic_trials: trials must be at least 1");

  EllipticSuiteReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);

  const auto record = [&](int trial, const EllipticReport& rep) {
    if (rep.status != EllipticStatus::boundary_max &&
        rep.status != EllipticStatus::constant)
      report.unexpected.emplace_back(trial, rep.status);
  };

  if (domain.boundary().empty()) {
    // A whole finite component: the only subharmonic functions are the
    // constants, so constants are the only admissible samples.
    for (int trial = 0; trial < trials; ++trial) {
      const double c = detail::symmetric_uniform(rng);
      VertexFunction f;
      for (VertexId v : domain.vertices()) f.set(v, c);
      record(trial, verify_elliptic_max_principle(oracle, domain, f));
    }
    return report;
  }

  const DirichletMatrix dm(oracle, domain);
  const SpectralDecomposition dec = jacobi_eigensolve(dm.dense());
  const std::size_t n = domain.interior_size();

  for (int trial = 0; trial < trials; ++trial) {
    VertexFunction f;
    if (trial % 2 == 0) {
      // Strictly subharmonic: Delta f = -g < 0 inside, zero on the boundary.
      std::vector<double> rhs(n);
      for (std::size_t i = 0; i < n; ++i)
        rhs[i] = -(0.25 + detail::unit_uniform(rng));
      const std::vector<double> x = spd_solve(dec, rhs);
      for (std::size_t i = 0; i < n; ++i) f.set(domain.interior_vertex(i), x[i]);
      for (VertexId v : domain.boundary()) f.set(v, 0.0);
    } else {
      // Harmonic extension of random boundary data.
      VertexFunction b;
      for (VertexId v : domain.boundary()) b.set(v, detail::unit_uniform(rng));
      std::vector<double> load(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (VertexId y : oracle.neighbors(domain.interior_vertex(i)))
          if (!domain.is_interior(y)) load[i] += b.value(y);
      const std::vector<double> x = spd_solve(dec, load);
      for (std::size_t i = 0; i < n; ++i) f.set(domain.interior_vertex(i), x[i]);
      for (VertexId v : domain.boundary()) f.set(v, b.value(v));
    }
    record(trial, verify_elliptic_max_principle(oracle, domain, f));
  }
  return report;
}

IdentityReport identity_battery(const GraphOracle& oracle, int window_radius,
                                int trials, std::uint64_t seed) {
  if (window_radius < 1)
    throw std::invalid_argument("identity_battery: window_radius must be at least 1");
  if (trials < 1) throw std::invalid_argument("identity_battery: trials must be at least 1");

  const FiniteDomain window = ball(oracle, oracle.root(), window_radius);
  const std::vector<VertexId>& pool = window.vertices();

  IdentityReport report;
  report.trials = trials;
  report.tolerance = 1e-12;

  std::mt19937_64 rng(seed);
  const auto random_function = [&] {
    VertexFunction f;
    const std::size_t support = 1 + detail::pick_index(rng, std::min<std::size_t>(8, pool.size()));
    for (std::size_t i = 0; i < support; ++i) {
      const std::size_t idx = detail::pick_index(rng, pool.size());
      const double val = detail::symmetric_uniform(rng);
      f.set(pool[idx], val);
    }
    return f;
  };

  for (int trial = 0; trial < trials; ++trial) {
    const VertexFunction f = random_function();
    const VertexFunction g = random_function();
    const double norm_scale = 1.0 + f.l2_norm() * g.l2_norm();

    const VertexFunction lap_f = laplacian_apply(oracle, f);
    const VertexFunction lap_g = laplacian_apply(oracle, g);

    const double green =
        std::abs(edge_inner(coboundary(oracle, f), coboundary(oracle, g)) -
                 inner(lap_f, g));
    report.worst_green = std::max(report.worst_green, green / norm_scale);

    const double symmetry = std::abs(inner(lap_f, g) - inner(f, lap_g));
    report.worst_symmetry = std::max(report.worst_symmetry, symmetry / norm_scale);

    const VertexFunction adj_f = adjacency_apply(oracle, f);
    double adjacency = 0.0;
    for (const auto& [v, lap_value] : lap_f.entries()) {
      const double m = static_cast<double>(oracle.valence(v));
      adjacency = std::max(
          adjacency, std::abs(lap_value + adj_f.value(v) - m * f.value(v)));
    }
    for (const auto& [v, adj_value] : adj_f.entries()) {
      const double m = static_cast<double>(oracle.valence(v));
      adjacency = std::max(
          adjacency, std::abs(lap_f.value(v) + adj_value - m * f.value(v)));
    }
    report.worst_adjacency =
        std::max(report.worst_adjacency, adjacency / (1.0 + f.l2_norm()));
  }
  return report;
}

}  // namespace heatgraph
