#include "heatgraph/operators.hpp"

#include <stdexcept>
#include <utility>

namespace heatgraph {

VertexFunction laplacian_apply(const GraphOracle& oracle, const VertexFunction& f) {
  VertexFunction out;
  for (const auto& [x, v] : f.entries()) {
    if (v == 0.0) continue;
    const auto& nbrs = oracle.neighbors(x);
    out.add(x, static_cast<double>(nbrs.size()) * v);
    for (VertexId y : nbrs) {
      out.add(y, -v);
    }
  }
  return out;
}

VertexFunction normalized_laplacian_apply(const GraphOracle& oracle,
                                          const VertexFunction& f) {
  VertexFunction lap = laplacian_apply(oracle, f);
  VertexFunction out;
  for (const auto& [x, v] : lap.entries()) {
    std::size_t m = oracle.valence(x);
    if (m == 0) {
      throw GraphStructureError("isolated vertex " + std::to_string(x));
    }
    out.set(x, v / static_cast<double>(m));
  }
  return out;
}

VertexFunction adjacency_apply(const GraphOracle& oracle, const VertexFunction& f) {
  VertexFunction out;
  for (const auto& [x, v] : f.entries()) {
    if (v == 0.0) continue;
    for (VertexId y : oracle.neighbors(x)) {
      out.add(y, v);
    }
  }
  return out;
}

EdgeFunction coboundary(const GraphOracle& oracle, const VertexFunction& f) {
  EdgeFunction df;
  for (const auto& [x, v] : f.entries()) {
    if (v == 0.0) continue;
    for (VertexId y : oracle.neighbors(x)) {
      df.set(x, y, f.value(x) - f.value(y));
    }
  }
  return df;
}

std::vector<double> operator_norm_probe(const GraphOracle& oracle,
                                        const std::vector<VertexId>& witnesses) {
  std::vector<double> out;
  out.reserve(witnesses.size());
  for (VertexId x : witnesses) {
    out.push_back(laplacian_apply(oracle, VertexFunction::delta(x)).l2_norm());
  }
  return out;
}

DirichletMatrix::DirichletMatrix(const GraphOracle& oracle, FiniteDomain domain)
    : domain_(std::move(domain)) {
  const std::size_t n = domain_.interior_size();
  if (n == 0) {
    throw std::domain_error("dirichlet_matrix: no interior vertices");
  }
  dense_ = Matrix(n, n);
  diagonal_.resize(n);
  interior_adjacency_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId x = domain_.interior_vertex(i);
    const auto& nbrs = oracle.neighbors(x);
    diagonal_[i] = static_cast<double>(nbrs.size());
    dense_(i, i) = diagonal_[i];
    for (VertexId y : nbrs) {
      if (auto j = domain_.interior_index(y)) {
        dense_(i, *j) = -1.0;
        interior_adjacency_[i].push_back(*j);
      }
    }
  }
}

std::vector<double> DirichletMatrix::apply(const std::vector<double>& v) const {
  const std::size_t n = size();
  if (v.size() != n) {
    throw std::invalid_argument("DirichletMatrix::apply: size mismatch");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diagonal_[i] * v[i];
    for (std::size_t j : interior_adjacency_[i]) {
      s -= v[j];
    }
    out[i] = s;
  }
  return out;
}

DirichletMatrix dirichlet_matrix(const GraphOracle& oracle, const FiniteDomain& domain) {
  return DirichletMatrix(oracle, domain);
}

}  // namespace heatgraph
