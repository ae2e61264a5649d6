#pragma once

#include <vector>

#include "heatgraph/matrix.hpp"
#include "heatgraph/operators.hpp"

namespace heatgraph {

// Full eigendecomposition of a symmetric matrix: ascending eigenvalues,
// orthonormal eigenvectors stored as columns, and the worst residual
// max_j ||A v_j - lambda_j v_j||_2.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  double residual = 0.0;

  std::size_t size() const { return eigenvalues.size(); }
};

// Cyclic Jacobi sweeps until the off-diagonal Frobenius mass drops below
// 1e-14 * ||A||_F (hard cap 100 sweeps, NumericalError on failure).  Output
// is deterministic: fixed sweep order, eigenvalues ascending, and each
// eigenvector's first non-negligible component made positive.  Throws
// std::invalid_argument when the input is not symmetric to 1e-13 relative.
SpectralDecomposition jacobi_eigensolve(const Matrix& a);

SpectralDecomposition eigensolve(const DirichletMatrix& m);

// e^{-t a} by scaling-and-squaring with a truncated Taylor series.  Kept
// free of the eigensolver so the two can cross-validate each other.
Matrix expm(const Matrix& a, double t);

// e^{-t a} v; at t = 0 returns v unchanged.  t < 0 throws.
std::vector<double> expm_apply(const Matrix& a, double t, const std::vector<double>& v);
std::vector<double> expm_apply(const DirichletMatrix& m, double t,
                               const std::vector<double>& v);

// Solve A x = rhs through the decomposition (A positive definite).
std::vector<double> spd_solve(const SpectralDecomposition& dec,
                              const std::vector<double>& rhs);

}  // namespace heatgraph
