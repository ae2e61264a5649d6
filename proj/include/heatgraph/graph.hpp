#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "heatgraph/errors.hpp"

namespace heatgraph {

using VertexId = std::uint64_t;

// How many vertices a breadth-first exploration may touch before it is
// aborted with a GraphStructureError.  Read from HEATGRAPH_MAX_VERTICES,
// default 200000.
std::size_t exploration_limit();

// A locally finite, non-oriented graph behind a neighbor oracle.  Infinite
// graphs are fine: only the finitely many vertices actually queried are ever
// realized.  Neighbor lists are memoized and returned sorted; the memo table
// is guarded, so concurrent queries are safe.  Copies share the memo table;
// with_root() re-bases the designated root without recomputing anything.
class GraphOracle {
 public:
  using NeighborFn = std::function<std::vector<VertexId>(VertexId)>;

  GraphOracle(std::string name, VertexId root, NeighborFn fn);

  // Finite graph from an explicit adjacency map.  Querying a vertex absent
  // from the map throws GraphStructureError.
  static GraphOracle from_edges(std::string name,
                                std::map<VertexId, std::vector<VertexId>> adjacency,
                                std::optional<VertexId> root = std::nullopt);

  // Sorted, deduplicated, self-loop-free neighbor list.  The reference stays
  // valid for the lifetime of the oracle.
  const std::vector<VertexId>& neighbors(VertexId x) const;

  // Valence m(x).
  std::size_t valence(VertexId x) const { return neighbors(x).size(); }

  VertexId root() const { return root_; }
  const std::string& name() const;

  GraphOracle with_root(VertexId new_root) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  VertexId root_;
};

// Exact BFS distances from source for every vertex within max_depth.
// Verifies adjacency symmetry on every explored edge whose endpoints both
// lie in the explored set.
std::unordered_map<VertexId, int> bfs_distances(const GraphOracle& oracle,
                                                VertexId source, int max_depth);

// A finite vertex set U split into interior and boundary:
//   interior = { x in U : every neighbor of x lies in U },  boundary = U \ interior.
// interior_index maps the sorted interior onto 0..n-1; that indexing realizes
// the embedding/projection pair used by the Dirichlet Laplacian.
class FiniteDomain {
 public:
  FiniteDomain(const GraphOracle& oracle, std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexId>& interior() const { return interior_; }
  const std::vector<VertexId>& boundary() const { return boundary_; }

  bool contains(VertexId x) const;
  bool is_interior(VertexId x) const;

  // Position of x in the sorted interior, if x is interior.
  std::optional<std::size_t> interior_index(VertexId x) const;
  std::size_t interior_size() const { return interior_.size(); }
  VertexId interior_vertex(std::size_t i) const { return interior_[i]; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<VertexId> interior_;
  std::vector<VertexId> boundary_;
  std::unordered_map<VertexId, std::size_t> index_;
};

// Metric ball B_radius(center) in the path metric, with the interior /
// boundary decomposition computed.
FiniteDomain ball(const GraphOracle& oracle, VertexId center, int radius);

// Memoized BFS distance d(., source).  distance() extends the explored
// radius on demand, one BFS layer at a time.
class PathMetric {
 public:
  PathMetric(GraphOracle oracle, VertexId source);

  int distance(VertexId x);
  int explored_radius() const { return radius_; }
  VertexId source() const { return source_; }

 private:
  void extend_one_layer();

  GraphOracle oracle_;
  VertexId source_;
  int radius_ = 0;
  std::unordered_map<VertexId, int> dist_;
  std::vector<VertexId> frontier_;
};

// The exhaustion B_1(center), B_2(center), ...  Successive calls to next()
// yield the balls in order; the nesting U_k subset of interior(U_{k+1}) is
// checked and a violation (impossible for metric balls on a symmetric graph)
// throws GraphStructureError.
class Exhaustion {
 public:
  Exhaustion(GraphOracle oracle, VertexId center);

  FiniteDomain next();
  int radius() const { return radius_; }

 private:
  GraphOracle oracle_;
  VertexId center_;
  int radius_ = 0;
  std::vector<VertexId> previous_vertices_;
};

}  // namespace heatgraph
