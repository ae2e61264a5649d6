#include "heatgraph/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <utility>

namespace heatgraph {

std::size_t exploration_limit() {
  const char* env = std::getenv("HEATGRAPH_MAX_VERTICES");
  if (env != nullptr) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return 200000;
}

struct GraphOracle::State {
  std::string name;
  NeighborFn fn;
  mutable std::mutex mutex;
  mutable std::unordered_map<VertexId, std::vector<VertexId>> memo;
};

GraphOracle::GraphOracle(std::string name, VertexId root, NeighborFn fn)
    : state_(std::make_shared<State>()), root_(root) {
  state_->name = std::move(name);
  state_->fn = std::move(fn);
}

GraphOracle GraphOracle::from_edges(std::string name,
                                    std::map<VertexId, std::vector<VertexId>> adjacency,
                                    std::optional<VertexId> root) {
  if (adjacency.empty()) {
    throw GraphStructureError("empty graph");
  }
  VertexId base = root.has_value() ? *root : adjacency.begin()->first;
  auto table = std::make_shared<std::map<VertexId, std::vector<VertexId>>>(std::move(adjacency));
  auto fn = [table](VertexId x) -> std::vector<VertexId> {
    auto it = table->find(x);
    if (it == table->end()) {
      throw GraphStructureError("vertex " + std::to_string(x) + " is not in the graph");
    }
    return it->second;
  };
  return GraphOracle(std::move(name), base, std::move(fn));
}

const std::vector<VertexId>& GraphOracle::neighbors(VertexId x) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto it = state_->memo.find(x);
  if (it != state_->memo.end()) {
    return it->second;
  }
  std::vector<VertexId> list = state_->fn(x);
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (std::binary_search(list.begin(), list.end(), x)) {
    throw GraphStructureError("self-loop at vertex " + std::to_string(x));
  }
  auto [pos, inserted] = state_->memo.emplace(x, std::move(list));
  (void)inserted;
  return pos->second;
}

const std::string& GraphOracle::name() const { return state_->name; }

GraphOracle GraphOracle::with_root(VertexId new_root) const {
  GraphOracle copy = *this;
  copy.root_ = new_root;
  return copy;
}

std::unordered_map<VertexId, int> bfs_distances(const GraphOracle& oracle,
                                                VertexId source, int max_depth) {
  if (max_depth < 0) {
    throw std::invalid_argument("bfs_distances: negative depth");
  }
  const std::size_t cap = exploration_limit();
  std::unordered_map<VertexId, int> dist;
  dist.emplace(source, 0);
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    int dx = dist.at(x);
    if (dx == max_depth) {
      continue;
    }
    for (VertexId y : oracle.neighbors(x)) {
      if (dist.emplace(y, dx + 1).second) {
        if (dist.size() > cap) {
          throw GraphStructureError(
              "exploration limit of " + std::to_string(cap) +
              " vertices exceeded (HEATGRAPH_MAX_VERTICES)");
        }
        queue.push_back(y);
      }
    }
  }
  // Symmetry check on every edge inside the explored set.
  for (const auto& [x, dx] : dist) {
    (void)dx;
    for (VertexId y : oracle.neighbors(x)) {
      if (dist.count(y) == 0) continue;
      const auto& back = oracle.neighbors(y);
      if (!std::binary_search(back.begin(), back.end(), x)) {
        throw GraphStructureError("asymmetric adjacency: " + std::to_string(y) +
                                  " ~ " + std::to_string(x) + " missing");
      }
    }
  }
  return dist;
}

FiniteDomain::FiniteDomain(const GraphOracle& oracle, std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (VertexId x : vertices_) {
    const auto& nbrs = oracle.neighbors(x);
    bool inside = std::all_of(nbrs.begin(), nbrs.end(), [&](VertexId y) {
      return std::binary_search(vertices_.begin(), vertices_.end(), y);
    });
    if (inside) {
      interior_.push_back(x);
    } else {
      boundary_.push_back(x);
    }
  }
  index_.reserve(interior_.size());
  for (std::size_t i = 0; i < interior_.size(); ++i) {
    index_.emplace(interior_[i], i);
  }
}

bool FiniteDomain::contains(VertexId x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

bool FiniteDomain::is_interior(VertexId x) const { return index_.count(x) > 0; }

std::optional<std::size_t> FiniteDomain::interior_index(VertexId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteDomain ball(const GraphOracle& oracle, VertexId center, int radius) {
  if (radius < 0) {
    throw std::invalid_argument("ball: negative radius");
  }
  auto dist = bfs_distances(oracle, center, radius);
  std::vector<VertexId> vertices;
  vertices.reserve(dist.size());
  for (const auto& [v, d] : dist) {
    (void)d;
    vertices.push_back(v);
  }
  return FiniteDomain(oracle, std::move(vertices));
}

PathMetric::PathMetric(GraphOracle oracle, VertexId source)
    : oracle_(std::move(oracle)), source_(source) {
  dist_.emplace(source, 0);
  frontier_.push_back(source);
}

void PathMetric::extend_one_layer() {
  const std::size_t cap = exploration_limit();
  std::vector<VertexId> next;
  for (VertexId x : frontier_) {
    for (VertexId y : oracle_.neighbors(x)) {
      if (dist_.emplace(y, radius_ + 1).second) {
        if (dist_.size() > cap) {
          throw GraphStructureError(
              "exploration limit of " + std::to_string(cap) +
              " vertices exceeded (HEATGRAPH_MAX_VERTICES)");
        }
        next.push_back(y);
      }
    }
  }
  frontier_ = std::move(next);
  ++radius_;
}

int PathMetric::distance(VertexId x) {
  auto it = dist_.find(x);
  while (it == dist_.end()) {
    if (frontier_.empty()) {
      throw GraphStructureError("vertex " + std::to_string(x) +
                                " is not reachable from the source");
    }
    extend_one_layer();
    it = dist_.find(x);
  }
  return it->second;
}

Exhaustion::Exhaustion(GraphOracle oracle, VertexId center)
    : oracle_(std::move(oracle)), center_(center) {}

FiniteDomain Exhaustion::next() {
  ++radius_;
  FiniteDomain domain = ball(oracle_, center_, radius_);
  if (!previous_vertices_.empty()) {
    const auto& inner = domain.interior();
    if (!std::includes(inner.begin(), inner.end(), previous_vertices_.begin(),
                       previous_vertices_.end())) {
      throw GraphStructureError("exhaustion nesting violated at radius " +
                                std::to_string(radius_));
    }
  }
  previous_vertices_ = domain.vertices();
  return domain;
}

}  // namespace heatgraph
