#include "heatgraph/generators.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace heatgraph {

namespace {

constexpr long long kCoordLimit = 1LL << 30;  // far beyond any explorable ball

[[noreturn]] void id_out_of_range(const char* generator) {
  throw GraphStructureError(std::string(generator) +
                            ": vertex id out of range for this generator");
}

using U128 = unsigned __int128;

std::uint64_t to_u64(U128 v, const char* generator) {
  if (v > std::numeric_limits<std::uint64_t>::max()) id_out_of_range(generator);
  return static_cast<std::uint64_t>(v);
}

// floor((sqrt(8z+1) - 1) / 2): the largest w with w(w+1)/2 <= z.
std::uint64_t triangular_root(std::uint64_t z) {
  std::uint64_t w = static_cast<std::uint64_t>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (U128(w) * (w + 1) / 2 > z) --w;
  while (U128(w + 1) * (w + 2) / 2 <= z) ++w;
  return w;
}

}  // namespace

std::uint64_t zigzag_encode(long long n) {
  if (n >= (1LL << 62) || n <= -(1LL << 62))
    throw GraphStructureError("zigzag_encode: integer out of range");
  return n >= 0 ? 2 * static_cast<std::uint64_t>(n)
                : 2 * static_cast<std::uint64_t>(-n) - 1;
}

long long zigzag_decode(std::uint64_t id) {
  return id % 2 == 0 ? static_cast<long long>(id / 2)
                     : -static_cast<long long>(id / 2) - 1;
}

std::uint64_t lattice_encode(long long x, long long y) {
  if (std::llabs(x) >= kCoordLimit || std::llabs(y) >= kCoordLimit)
    throw GraphStructureError("lattice_encode: coordinate out of range");
  const std::uint64_t a = zigzag_encode(x);
  const std::uint64_t b = zigzag_encode(y);
  return to_u64(U128(a + b) * (a + b + 1) / 2 + b, "lattice_z2");
}

std::pair<long long, long long> lattice_decode(std::uint64_t id) {
  const std::uint64_t w = triangular_root(id);
  const std::uint64_t b = id - static_cast<std::uint64_t>(U128(w) * (w + 1) / 2);
  const std::uint64_t a = w - b;
  return {zigzag_decode(a), zigzag_decode(b)};
}

std::uint64_t figure1_encode(std::uint64_t row, std::uint64_t offset) {
  if (row < 1 || offset >= row)
    throw std::invalid_argument("figure1_encode: need row >= 1 and offset < row");
  return to_u64(U128(row - 1) * row / 2 + offset, "figure1");
}

std::pair<std::uint64_t, std::uint64_t> figure1_decode(std::uint64_t id) {
  const std::uint64_t row = triangular_root(id) + 1;
  return {row, id - static_cast<std::uint64_t>(U128(row - 1) * row / 2)};
}

GraphOracle path_z() {
  return GraphOracle("path_z", zigzag_encode(0), [](VertexId id) {
    const long long n = zigzag_decode(id);
    if (std::llabs(n) >= kCoordLimit) id_out_of_range("path_z");
    return std::vector<VertexId>{zigzag_encode(n - 1), zigzag_encode(n + 1)};
  });
}

GraphOracle lattice_z2() {
  return GraphOracle("lattice_z2", lattice_encode(0, 0), [](VertexId id) {
    const auto [x, y] = lattice_decode(id);
    if (std::llabs(x) >= kCoordLimit - 1 || std::llabs(y) >= kCoordLimit - 1)
      id_out_of_range("lattice_z2");
    return std::vector<VertexId>{lattice_encode(x - 1, y), lattice_encode(x + 1, y),
                                 lattice_encode(x, y - 1), lattice_encode(x, y + 1)};
  });
}

GraphOracle tree_regular(unsigned degree) {
  if (degree < 1) throw std::invalid_argument("tree_regular: degree must be at least 1");
  const U128 d = degree;
  return GraphOracle("tree_regular", 0, [d](VertexId id) {
    std::vector<VertexId> out;
    if (id == 0) {
      for (U128 i = 1; i <= d; ++i) out.push_back(to_u64(i, "tree_regular"));
      return out;
    }
    // Walk level starts: level 0 is {0}, level 1 has d vertices, and each
    // later level has (d-1) children per vertex.
    U128 prev_start = 0, start = 1, size = d;
    while (U128(id) >= start + size) {
      if (size == 0) id_out_of_range("tree_regular");
      prev_start = start;
      start += size;
      size *= d - 1;
    }
    const U128 j = U128(id) - start;
    out.push_back(to_u64(start == 1 ? U128(0) : prev_start + j / (d - 1), "tree_regular"));
    const U128 child_base = start + size + j * (d - 1);
    for (U128 i = 0; i < d - 1; ++i)
      out.push_back(to_u64(child_base + i, "tree_regular"));
    return out;
  });
}

GraphOracle figure1() {
  return GraphOracle("figure1", 0, [](VertexId id) {
    const auto [row, offset] = figure1_decode(id);
    (void)offset;
    if (row > exploration_limit()) id_out_of_range("figure1");
    std::vector<VertexId> out;
    if (row >= 2) {
      const std::uint64_t prev_start = figure1_encode(row - 1, 0);
      for (std::uint64_t i = 0; i < row - 1; ++i) out.push_back(prev_start + i);
    }
    const std::uint64_t next_start =
        to_u64(U128(row) * (row + 1) / 2, "figure1");
    for (std::uint64_t i = 0; i <= row; ++i)
      out.push_back(to_u64(U128(next_start) + i, "figure1"));
    return out;
  });
}

GraphOracle star_growing(unsigned arms) {
  if (arms < 1) throw std::invalid_argument("star_growing: arms must be at least 1");
  const std::uint64_t a = arms;
  return GraphOracle("star_growing", 0, [a](VertexId id) {
    std::vector<VertexId> out;
    if (id == 0) {
      for (std::uint64_t r = 1; r <= a; ++r) out.push_back(r);
      return out;
    }
    const std::uint64_t position = (id - 1) / a;  // 0-based along the arm
    out.push_back(position == 0 ? 0 : id - a);
    out.push_back(to_u64(U128(id) + a, "star_growing"));
    return out;
  });
}

GraphOracle load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphStructureError("load_edge_list: cannot open '" + path + "'");

  const auto parse_id = [&](const std::string& token, int line) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw GraphStructureError("load_edge_list: " + path + ":" +
                                std::to_string(line) + ": bad vertex id '" + token + "'");
    errno = 0;
    const unsigned long long v = std::strtoull(token.c_str(), nullptr, 10);
    if (errno != 0)
      throw GraphStructureError("load_edge_list: " + path + ":" +
                                std::to_string(line) + ": vertex id overflows");
    return static_cast<VertexId>(v);
  };

  std::map<VertexId, std::vector<VertexId>> adjacency;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a)) continue;  // blank or comment-only line
    if (!(ss >> b) || (ss >> extra))
      throw GraphStructureError("load_edge_list: " + path + ":" +
                                std::to_string(line_no) +
                                ": expected exactly two vertex ids");
    const VertexId u = parse_id(a, line_no);
    const VertexId v = parse_id(b, line_no);
    if (u == v)
      throw GraphStructureError("load_edge_list: " + path + ":" +
                                std::to_string(line_no) + ": self-loop");
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  if (adjacency.empty())
    throw GraphStructureError("load_edge_list: '" + path + "' contains no edges");

  const VertexId root = adjacency.begin()->first;
  return GraphOracle::from_edges(path, std::move(adjacency), root);
}

}  // namespace heatgraph
