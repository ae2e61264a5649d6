#pragma once

#include <map>
#include <utility>

#include "heatgraph/graph.hpp"

namespace heatgraph {

// Finitely supported function V -> R.  Absent vertices evaluate to 0;
// stored zeros are allowed and ignored by equality.
class VertexFunction {
 public:
  VertexFunction() = default;

  static VertexFunction delta(VertexId x);

  double value(VertexId x) const;
  void set(VertexId x, double v);
  void add(VertexId x, double v);

  // Stored entries in ascending vertex order (may include explicit zeros).
  const std::map<VertexId, double>& entries() const { return entries_; }

  bool empty() const;
  double l2_norm() const;
  double sup_norm() const;
  double sum() const;

  // Equality as functions.
  friend bool operator==(const VertexFunction& a, const VertexFunction& b);

 private:
  std::map<VertexId, double> entries_;
};

// <f,g> = sum_x f(x) g(x).
double inner(const VertexFunction& f, const VertexFunction& g);

// Antisymmetric function on oriented edges, stored on the canonical
// orientation (min id, max id); evaluation against the orientation negates.
class EdgeFunction {
 public:
  using Key = std::pair<VertexId, VertexId>;

  double value(VertexId x, VertexId y) const;
  void set(VertexId x, VertexId y, double v);

  const std::map<Key, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, double> entries_;
};

// (phi,psi) = 1/2 sum over oriented edges = sum over canonical edges.
double edge_inner(const EdgeFunction& phi, const EdgeFunction& psi);

}  // namespace heatgraph
