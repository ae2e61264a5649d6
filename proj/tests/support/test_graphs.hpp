#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heatgraph/functions.hpp"
#include "heatgraph/graph.hpp"
#include "heatgraph/random.hpp"

// Shared fixtures: explicit finite graphs, a random connected-graph corpus,
// random finitely supported functions, and an RAII guard for the
// exploration-cap environment variable.

namespace testsupport {

using heatgraph::GraphOracle;
using heatgraph::VertexFunction;
using heatgraph::VertexId;

struct TestGraph {
  std::map<VertexId, std::vector<VertexId>> adjacency;

  void add_vertex(VertexId v) { adjacency[v]; }

  void add_edge(VertexId u, VertexId v) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  std::size_t size() const { return adjacency.size(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adjacency.size());
    for (const auto& [v, nbrs] : adjacency) {
      (void)nbrs;
      out.push_back(v);
    }
    return out;
  }

  GraphOracle oracle(std::string name = "test",
                     std::optional<VertexId> root = std::nullopt) const {
    return GraphOracle::from_edges(std::move(name), adjacency, root);
  }
};

// Path 0 - 1 - ... - (n-1).
inline TestGraph finite_path(int n) {
  TestGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return g;
}

inline TestGraph complete_graph(int n) {
  TestGraph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

// Connected graph on exactly n >= 2 vertices: a random attachment tree plus
// a few extra edges, with valences capped.
inline TestGraph random_connected_graph_exact(std::mt19937_64& rng, int n,
                                              std::size_t max_degree = 8) {
  using heatgraph::detail::pick_index;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  auto has_room = [&](int v) { return adj[static_cast<std::size_t>(v)].size() < max_degree; };
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(pick_index(rng, static_cast<std::size_t>(v)));
    for (int tries = 0; !has_room(u) && tries < 64; ++tries)
      u = static_cast<int>(pick_index(rng, static_cast<std::size_t>(v)));
    if (!has_room(u)) {
      for (int w = 0; w < v; ++w)
        if (has_room(w)) {
          u = w;
          break;
        }
    }
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  const int extra_attempts = static_cast<int>(pick_index(rng, static_cast<std::size_t>(n)));
  for (int e = 0; e < extra_attempts; ++e) {
    const int u = static_cast<int>(pick_index(rng, static_cast<std::size_t>(n)));
    const int v = static_cast<int>(pick_index(rng, static_cast<std::size_t>(n)));
    if (u == v || !has_room(u) || !has_room(v)) continue;
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  TestGraph g;
  for (int v = 0; v < n; ++v) {
    g.add_vertex(static_cast<VertexId>(v));
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w > v) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(w));
  }
  return g;
}

// Connected graph on 2..max_vertices vertices.
inline TestGraph random_connected_graph(std::mt19937_64& rng, int max_vertices,
                                        std::size_t max_degree = 8) {
  using heatgraph::detail::pick_index;
  const int n =
      2 + static_cast<int>(pick_index(rng, static_cast<std::size_t>(max_vertices - 1)));
  return random_connected_graph_exact(rng, n, max_degree);
}

// Random function supported on at most max_support vertices of the pool,
// with values in [-1, 1).
inline VertexFunction random_vertex_function(std::mt19937_64& rng,
                                             const std::vector<VertexId>& pool,
                                             std::size_t max_support = 8) {
  using heatgraph::detail::pick_index;
  using heatgraph::detail::symmetric_uniform;
  VertexFunction f;
  const std::size_t cap = std::min(max_support, pool.size());
  const std::size_t k = 1 + pick_index(rng, cap);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t idx = pick_index(rng, pool.size());
    const double val = symmetric_uniform(rng);
    f.set(pool[idx], val);
  }
  return f;
}

// Reference BFS over the explicit adjacency map.
inline std::map<VertexId, int> brute_force_distances(const TestGraph& g, VertexId source) {
  std::map<VertexId, int> dist;
  dist[source] = 0;
  std::vector<VertexId> frontier{source};
  int d = 0;
  while (!frontier.empty()) {
    std::vector<VertexId> next;
    for (VertexId x : frontier)
      for (VertexId y : g.adjacency.at(x))
        if (dist.find(y) == dist.end()) {
          dist[y] = d + 1;
          next.push_back(y);
        }
    frontier = std::move(next);
    ++d;
  }
  return dist;
}

// Sets (or clears, when value is null) an environment variable for the
// lifetime of the guard, restoring the previous state afterwards.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    const char* old = std::getenv(name);
    had_old_ = old != nullptr;
    if (had_old_) old_ = old;
    if (value != nullptr) {
      ::setenv(name, value, 1);
    } else {
      ::unsetenv(name);
    }
  }

  ~EnvGuard() {
    if (had_old_) {
      ::setenv(name_.c_str(), old_.c_str(), 1);
    } else {
      ::unsetenv(name_.c_str());
    }
  }

  EnvGuard(const EnvGuard&) = delete;
  EnvGuard& operator=(const EnvGuard&) = delete;

 private:
  std::string name_;
  std::string old_;
  bool had_old_ = false;
};

}  // namespace testsupport
