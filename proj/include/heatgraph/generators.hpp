#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "heatgraph/graph.hpp"

namespace heatgraph {

// Vertex-id codecs used by the builtin generators.  Ids are plain natural
// numbers so they survive CLI round trips.

// Z interleaved as 0, -1, 1, -2, 2, ...  (id 0 -> 0, id 1 -> -1, id 2 -> 1).
std::uint64_t zigzag_encode(long long n);
long long zigzag_decode(std::uint64_t id);

// Z^2 via the Cantor pairing of the two interleaved coordinates.
std::uint64_t lattice_encode(long long x, long long y);
std::pair<long long, long long> lattice_decode(std::uint64_t id);

// Row graph ids are row-major: row n (1-based) occupies (n-1)n/2 ... -1+n(n+1)/2.
std::uint64_t figure1_encode(std::uint64_t row, std::uint64_t offset);
std::pair<std::uint64_t, std::uint64_t> figure1_decode(std::uint64_t id);

// The integer line: every vertex has valence 2; root 0.
GraphOracle path_z();

// The square lattice: every vertex has valence 4; root (0,0).
GraphOracle lattice_z2();

// The infinite degree-regular tree (degree >= 1; degree 1 degenerates to a
// single edge).  Root 0, children of the root are 1..degree.
GraphOracle tree_regular(unsigned degree = 3);

// The row graph: row n holds n vertices, each adjacent to every vertex of
// rows n-1 and n+1, so valence grows as 2n while d(., root) stays n-1.
GraphOracle figure1();

// A spider: `arms` infinite rays glued at a central vertex 0.
GraphOracle star_growing(unsigned arms = 3);

// Finite graph from a file of whitespace-separated "u v" lines; '#' starts a
// comment and blank lines are skipped.  Lines are undirected edges;
// duplicates collapse and self-loops are rejected.  The root is the smallest
// vertex id.  Computations on a disconnected file see the root's component.
GraphOracle load_edge_list(const std::string& path);

}  // namespace heatgraph
