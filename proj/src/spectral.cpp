#include "heatgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "heatgraph/errors.hpp"

namespace heatgraph {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

void require_symmetric(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("jacobi_eigensolve: matrix is not square");
  const double tol = 1e-13 * std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol)
        throw std::invalid_argument("jacobi_eigensolve: matrix is not symmetric");
}

}  // namespace

SpectralDecomposition jacobi_eigensolve(const Matrix& a) {
  require_symmetric(a);
  const std::size_t n = a.rows();
  SpectralDecomposition dec;
  dec.eigenvectors = Matrix::identity(n);
  if (n == 0) return dec;

  Matrix w = a;
  Matrix& v = dec.eigenvectors;
  const double target = 1e-14 * a.frobenius_norm();

  int sweep = 0;
  double off = off_diagonal_norm(w);
  while (off > target) {
    if (++sweep > 100)
      throw NumericalError("jacobi_eigensolve: no convergence within 100 sweeps", off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        w(p, p) -= t * apq;
        w(q, q) += t * apq;
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double g = w(i, p);
          const double h = w(i, q);
          w(i, p) = g - s * (h + tau * g);
          w(p, i) = w(i, p);
          w(i, q) = h + s * (g - tau * h);
          w(q, i) = w(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double g = v(i, p);
          const double h = v(i, q);
          v(i, p) = g - s * (h + tau * g);
          v(i, q) = h + s * (g - tau * h);
        }
      }
    }
    off = off_diagonal_norm(w);
  }

  // Ascending eigenvalues; stable order for repeated ones.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

  dec.eigenvalues.resize(n);
  Matrix sorted(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    dec.eigenvalues[j] = w(src, src);
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > 1e-12) {
        if (v(i, src) < 0.0) sign = -1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) sorted(i, j) = sign * v(i, src);
  }
  dec.eigenvectors = std::move(sorted);

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t k = 0; k < n; ++k) row += a(i, k) * dec.eigenvectors(k, j);
      row -= dec.eigenvalues[j] * dec.eigenvectors(i, j);
      err += row * row;
    }
    worst = std::max(worst, std::sqrt(err));
  }
  dec.residual = worst;
  return dec;
}

SpectralDecomposition eigensolve(const DirichletMatrix& m) {
  return jacobi_eigensolve(m.dense());
}

Matrix expm(const Matrix& a, double t) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix is not square");
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("expm: time must be finite and non-negative");
  const std::size_t n = a.rows();
  if (t == 0.0) return Matrix::identity(n);

  // e^{-tA} = (e^{-tA/2^s})^{2^s}; scale until the series argument is small.
  Matrix b = a;
  b *= -t;
  int s = 0;
  double norm = b.inf_norm();
  while (norm > 0.5 && s < 64) {
    norm /= 2.0;
    ++s;
  }
  b *= std::ldexp(1.0, -s);

  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 80; ++k) {
    term = term * b;
    term *= 1.0 / static_cast<double>(k);
    result += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

std::vector<double> expm_apply(const Matrix& a, double t, const std::vector<double>& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("expm_apply: size mismatch");
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("expm_apply: time must be finite and non-negative");
  if (t == 0.0) return v;
  return expm(a, t) * v;
}

std::vector<double> expm_apply(const DirichletMatrix& m, double t,
                               const std::vector<double>& v) {
  return expm_apply(m.dense(), t, v);
}

std::vector<double> spd_solve(const SpectralDecomposition& dec,
                              const std::vector<double>& rhs) {
  const std::size_t n = dec.size();
  if (rhs.size() != n) throw std::invalid_argument("spd_solve: size mismatch");
  for (double lambda : dec.eigenvalues)
    if (lambda <= 0.0)
      throw std::invalid_argument("spd_solve: matrix is not positive definite");
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double coeff = 0.0;
    for (std::size_t i = 0; i < n; ++i) coeff += dec.eigenvectors(i, j) * rhs[i];
    coeff /= dec.eigenvalues[j];
    for (std::size_t i = 0; i < n; ++i) x[i] += coeff * dec.eigenvectors(i, j);
  }
  return x;
}

}  // namespace heatgraph
