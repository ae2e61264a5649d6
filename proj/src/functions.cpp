#include "heatgraph/functions.hpp"

#include <cmath>
#include <stdexcept>

namespace heatgraph {

VertexFunction VertexFunction::delta(VertexId x) {
  VertexFunction f;
  f.set(x, 1.0);
  return f;
}

double VertexFunction::value(VertexId x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? 0.0 : it->second;
}

void VertexFunction::set(VertexId x, double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("VertexFunction: non-finite value");
  }
  entries_[x] = v;
}

void VertexFunction::add(VertexId x, double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("VertexFunction: non-finite value");
  }
  entries_[x] += v;
}

bool VertexFunction::empty() const {
  for (const auto& [x, v] : entries_) {
    (void)x;
    if (v != 0.0) return false;
  }
  return true;
}

double VertexFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& [x, v] : entries_) {
    (void)x;
    s += v * v;
  }
  return std::sqrt(s);
}

double VertexFunction::sup_norm() const {
  double s = 0.0;
  for (const auto& [x, v] : entries_) {
    (void)x;
    s = std::max(s, std::abs(v));
  }
  return s;
}

double VertexFunction::sum() const {
  double s = 0.0;
  for (const auto& [x, v] : entries_) {
    (void)x;
    s += v;
  }
  return s;
}

bool operator==(const VertexFunction& a, const VertexFunction& b) {
  for (const auto& [x, v] : a.entries_) {
    if (v != b.value(x)) return false;
  }
  for (const auto& [x, v] : b.entries_) {
    if (v != a.value(x)) return false;
  }
  return true;
}

double inner(const VertexFunction& f, const VertexFunction& g) {
  // Iterate the smaller support.
  const VertexFunction& a = f.entries().size() <= g.entries().size() ? f : g;
  const VertexFunction& b = &a == &f ? g : f;
  double s = 0.0;
  for (const auto& [x, v] : a.entries()) {
    s += v * b.value(x);
  }
  return s;
}

double EdgeFunction::value(VertexId x, VertexId y) const {
  const bool flip = x > y;
  auto it = entries_.find(flip ? Key{y, x} : Key{x, y});
  if (it == entries_.end()) return 0.0;
  return flip ? -it->second : it->second;
}

void EdgeFunction::set(VertexId x, VertexId y, double v) {
  if (x == y) {
    throw std::invalid_argument("EdgeFunction: degenerate edge");
  }
  if (!std::isfinite(v)) {
    throw std::invalid_argument("EdgeFunction: non-finite value");
  }
  if (x < y) {
    entries_[Key{x, y}] = v;
  } else {
    entries_[Key{y, x}] = -v;
  }
}

double edge_inner(const EdgeFunction& phi, const EdgeFunction& psi) {
  const EdgeFunction& a = phi.entries().size() <= psi.entries().size() ? phi : psi;
  const EdgeFunction& b = &a == &phi ? psi : phi;
  double s = 0.0;
  for (const auto& [e, v] : a.entries()) {
    s += v * b.value(e.first, e.second);
  }
  return s;
}

}  // namespace heatgraph
