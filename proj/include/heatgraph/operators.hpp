#pragma once

#include <vector>

#include "heatgraph/functions.hpp"
#include "heatgraph/graph.hpp"
#include "heatgraph/matrix.hpp"

namespace heatgraph {

// Delta f(x) = m(x) f(x) - sum_{y~x} f(y), supported on supp(f) and its
// neighbors.
VertexFunction laplacian_apply(const GraphOracle& oracle, const VertexFunction& f);

// (1/m(x)) Delta f(x).  Throws GraphStructureError on an isolated vertex.
VertexFunction normalized_laplacian_apply(const GraphOracle& oracle,
                                          const VertexFunction& f);

// A f(x) = sum_{y~x} f(y).
VertexFunction adjacency_apply(const GraphOracle& oracle, const VertexFunction& f);

// df([x,y]) = f(x) - f(y) on edges meeting supp(f); antisymmetric by storage.
EdgeFunction coboundary(const GraphOracle& oracle, const VertexFunction& f);

// ||Delta delta_x||_2 for each witness, computed by applying the Laplacian
// and taking the norm.  Equals sqrt(m(x)^2 + m(x)); a lower bound for the
// operator norm, unbounded along any valence-unbounded witness sequence.
std::vector<double> operator_norm_probe(const GraphOracle& oracle,
                                        const std::vector<VertexId>& witnesses);

// The Dirichlet Laplacian of a finite domain, indexed by interior_index:
// diagonal m(x) (full ambient valence), entry -1 for interior neighbor pairs.
// Dense entries feed the eigensolver; the interior adjacency lists give a
// fast apply.
class DirichletMatrix {
 public:
  DirichletMatrix(const GraphOracle& oracle, FiniteDomain domain);

  const FiniteDomain& domain() const { return domain_; }
  const Matrix& dense() const { return dense_; }
  std::size_t size() const { return dense_.rows(); }

  std::vector<double> apply(const std::vector<double>& v) const;

 private:
  FiniteDomain domain_;
  Matrix dense_;
  std::vector<double> diagonal_;
  std::vector<std::vector<std::size_t>> interior_adjacency_;
};

// Throws std::domain_error when the domain has no interior vertices.
DirichletMatrix dirichlet_matrix(const GraphOracle& oracle, const FiniteDomain& domain);

}  // namespace heatgraph
