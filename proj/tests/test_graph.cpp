#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heatgraph/generators.hpp"
#include "heatgraph/graph.hpp"
#include "support/test_graphs.hpp"

using namespace heatgraph;
using testsupport::EnvGuard;
using testsupport::TestGraph;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  REQUIRE(out.good());
}

}  // namespace

TEST_CASE("zigzag codec interleaves 0, -1, 1, -2, 2, ...") {
  CHECK(zigzag_encode(0) == 0);
  CHECK(zigzag_encode(-1) == 1);
  CHECK(zigzag_encode(1) == 2);
  CHECK(zigzag_encode(-2) == 3);
  CHECK(zigzag_encode(2) == 4);
  for (long long n = -100; n <= 100; ++n) CHECK(zigzag_decode(zigzag_encode(n)) == n);
  CHECK(zigzag_decode(zigzag_encode(1LL << 40)) == (1LL << 40));
  CHECK_THROWS_AS(zigzag_encode(1LL << 62), GraphStructureError);
  CHECK_THROWS_AS(zigzag_encode(-(1LL << 62)), GraphStructureError);
}

TEST_CASE("lattice codec round-trips and is injective on a window") {
  std::set<std::uint64_t> seen;
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y) {
      const std::uint64_t id = lattice_encode(x, y);
      CHECK(lattice_decode(id) == std::pair<long long, long long>{x, y});
      CHECK(seen.insert(id).second);
    }
}

TEST_CASE("row-graph codec is row-major") {
  CHECK(figure1_encode(1, 0) == 0);
  CHECK(figure1_encode(2, 0) == 1);
  CHECK(figure1_encode(2, 1) == 2);
  CHECK(figure1_encode(3, 0) == 3);
  for (std::uint64_t row = 1; row <= 40; ++row)
    for (std::uint64_t offset : {std::uint64_t{0}, row / 2, row - 1}) {
      const auto [r, o] = figure1_decode(figure1_encode(row, offset));
      CHECK(r == row);
      CHECK(o == offset);
    }
  CHECK_THROWS_AS(figure1_encode(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(figure1_encode(3, 3), std::invalid_argument);
}

TEST_CASE("neighbor lists come back sorted, deduplicated, and memoized") {
  GraphOracle oracle("raw", 0, [](VertexId x) -> std::vector<VertexId> {
    if (x == 0) return {3, 1, 3, 2, 1};
    return {0};
  });
  const std::vector<VertexId> expected{1, 2, 3};
  CHECK(oracle.neighbors(0) == expected);
  CHECK(oracle.valence(0) == 3);
  // Memoized: the reference is stable across calls.
  CHECK(&oracle.neighbors(0) == &oracle.neighbors(0));
}

TEST_CASE("self-loops are a structural error") {
  GraphOracle oracle("loop", 0, [](VertexId x) -> std::vector<VertexId> {
    if (x == 0) return {0, 1};
    return {0};
  });
  CHECK_THROWS_AS(oracle.neighbors(0), GraphStructureError);
  CHECK_THROWS_WITH(oracle.neighbors(0), doctest::Contains("self-loop"));
}

TEST_CASE("from_edges validates the map and defaults the root to the least id") {
  CHECK_THROWS_AS(GraphOracle::from_edges("empty", {}), GraphStructureError);

  auto oracle = GraphOracle::from_edges("pair", {{7, {9}}, {9, {7}}});
  CHECK(oracle.root() == 7);
  CHECK(oracle.name() == "pair");

  auto rooted = GraphOracle::from_edges("pair", {{7, {9}}, {9, {7}}}, 9);
  CHECK(rooted.root() == 9);

  auto dangling = GraphOracle::from_edges("dangling", {{0, {1}}});
  CHECK(dangling.neighbors(0) == std::vector<VertexId>{1});
  CHECK_THROWS_WITH_AS(dangling.neighbors(1), doctest::Contains("not in the graph"),
                       GraphStructureError);
}

TEST_CASE("with_root re-bases without touching the structure") {
  const GraphOracle line = path_z();
  const GraphOracle shifted = line.with_root(zigzag_encode(2));
  CHECK(shifted.root() == zigzag_encode(2));
  CHECK(shifted.name() == line.name());
  CHECK(shifted.neighbors(0) == line.neighbors(0));
}

TEST_CASE("bfs_distances matches a reference BFS and counts the ball") {
  const GraphOracle line = path_z();
  const auto dist = bfs_distances(line, zigzag_encode(0), 5);
  CHECK(dist.size() == 11);
  for (long long n = -5; n <= 5; ++n)
    CHECK(dist.at(zigzag_encode(n)) == static_cast<int>(n < 0 ? -n : n));

  std::mt19937_64 rng(41);
  const TestGraph h = testsupport::random_connected_graph(rng, 40);
  const auto oracle = h.oracle();
  const auto got = bfs_distances(oracle, oracle.root(), 1000);
  const auto want = testsupport::brute_force_distances(h, oracle.root());
  REQUIRE(got.size() == want.size());
  for (const auto& [v, d] : want) CHECK(got.at(v) == d);

  CHECK_THROWS_AS(bfs_distances(line, 0, -1), std::invalid_argument);
}

TEST_CASE("bfs_distances rejects asymmetric adjacency") {
  GraphOracle oracle("asym", 0, [](VertexId x) -> std::vector<VertexId> {
    if (x == 0) return {1};
    return {};
  });
  CHECK_THROWS_WITH_AS(bfs_distances(oracle, 0, 2), doctest::Contains("asymmetric"),
                       GraphStructureError);
}

TEST_CASE("metric balls split into interior and boundary") {
  const GraphOracle line = path_z();
  const FiniteDomain b3 = ball(line, zigzag_encode(0), 3);
  CHECK(b3.vertices().size() == 7);
  CHECK(b3.interior().size() == 5);
  CHECK(b3.boundary().size() == 2);
  for (long long n = -2; n <= 2; ++n) CHECK(b3.is_interior(zigzag_encode(n)));
  CHECK_FALSE(b3.is_interior(zigzag_encode(3)));
  CHECK(b3.contains(zigzag_encode(-3)));
  CHECK_FALSE(b3.contains(zigzag_encode(4)));
  // Interior indexing follows ascending ids.
  for (std::size_t i = 0; i < b3.interior_size(); ++i)
    CHECK(b3.interior_index(b3.interior_vertex(i)) == i);
  CHECK_FALSE(b3.interior_index(zigzag_encode(3)).has_value());

  const FiniteDomain b0 = ball(line, 0, 0);
  CHECK(b0.vertices().size() == 1);
  CHECK(b0.interior().empty());

  CHECK_THROWS_AS(ball(line, 0, -2), std::invalid_argument);
}

TEST_CASE("ball sizes on the builtin generators") {
  const FiniteDomain tree_ball = ball(tree_regular(3), 0, 2);
  CHECK(tree_ball.vertices().size() == 10);
  CHECK(tree_ball.interior().size() == 4);
  CHECK(tree_ball.boundary().size() == 6);

  const FiniteDomain row_ball = ball(figure1(), 0, 2);
  CHECK(row_ball.vertices().size() == 6);
  CHECK(row_ball.interior() == std::vector<VertexId>{0, 1, 2});
  CHECK(row_ball.boundary() == std::vector<VertexId>{3, 4, 5});

  // |B_r| = 2r^2 + 2r + 1 on the square lattice.
  const FiniteDomain lat_ball = ball(lattice_z2(), lattice_encode(0, 0), 3);
  CHECK(lat_ball.vertices().size() == 25);
  CHECK(lat_ball.interior().size() == 13);
}

TEST_CASE("explicit finite domains") {
  const TestGraph g = testsupport::finite_path(5);
  const GraphOracle oracle = g.oracle();
  const FiniteDomain dom(oracle, {0, 1, 2});
  CHECK(dom.interior() == std::vector<VertexId>{0, 1});
  CHECK(dom.boundary() == std::vector<VertexId>{2});
  CHECK(dom.interior_index(0) == 0);
  CHECK(dom.interior_index(1) == 1);
  CHECK_FALSE(dom.interior_index(2).has_value());
  CHECK_FALSE(dom.contains(4));
}

TEST_CASE("exploration cap comes from the environment") {
  {
    EnvGuard guard("HEATGRAPH_MAX_VERTICES", nullptr);
    CHECK(exploration_limit() == 200000);
  }
  {
    EnvGuard guard("HEATGRAPH_MAX_VERTICES", "abc");
    CHECK(exploration_limit() == 200000);
  }
  {
    EnvGuard guard("HEATGRAPH_MAX_VERTICES", "0");
    CHECK(exploration_limit() == 200000);
  }
  {
    EnvGuard guard("HEATGRAPH_MAX_VERTICES", "30");
    CHECK(exploration_limit() == 30);
    CHECK_THROWS_WITH_AS(ball(path_z(), 0, 40),
                         doctest::Contains("HEATGRAPH_MAX_VERTICES"), GraphStructureError);
  }
  // Restored afterwards.
  CHECK_NOTHROW(ball(path_z(), 0, 40));
}

TEST_CASE("path metric extends on demand and flags unreachable vertices") {
  PathMetric metric(lattice_z2(), lattice_encode(0, 0));
  CHECK(metric.distance(lattice_encode(0, 0)) == 0);
  CHECK(metric.distance(lattice_encode(3, 4)) == 7);
  CHECK(metric.distance(lattice_encode(-2, 5)) == 7);
  CHECK(metric.explored_radius() >= 7);

  auto two_parts = GraphOracle::from_edges(
      "parts", {{0, {1}}, {1, {0}}, {5, {6}}, {6, {5}}});
  PathMetric part_metric(two_parts, 0);
  CHECK(part_metric.distance(1) == 1);
  CHECK_THROWS_WITH_AS(part_metric.distance(5), doctest::Contains("not reachable"),
                       GraphStructureError);
}

TEST_CASE("exhaustion yields nested balls") {
  Exhaustion ex(star_growing(3), 0);
  const FiniteDomain b1 = ex.next();
  CHECK(ex.radius() == 1);
  CHECK(b1.vertices().size() == 4);
  const FiniteDomain b2 = ex.next();
  CHECK(b2.vertices().size() == 7);
  const FiniteDomain b3 = ex.next();
  CHECK(b3.vertices().size() == 10);
  // Nesting: every vertex of B_k is interior in B_{k+1}.
  for (VertexId v : b1.vertices()) CHECK(b2.is_interior(v));
  for (VertexId v : b2.vertices()) CHECK(b3.is_interior(v));
}

TEST_CASE("spider generator wiring") {
  const GraphOracle spider = star_growing(4);
  CHECK(spider.root() == 0);
  CHECK(spider.neighbors(0) == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(spider.neighbors(1) == std::vector<VertexId>{0, 5});
  CHECK(spider.neighbors(5) == std::vector<VertexId>{1, 9});
  CHECK_THROWS_AS(star_growing(0), std::invalid_argument);
}

TEST_CASE("regular tree wiring") {
  const GraphOracle tree = tree_regular(3);
  CHECK(tree.neighbors(0) == std::vector<VertexId>{1, 2, 3});
  CHECK(tree.valence(1) == 3);
  CHECK(tree.valence(7) == 3);
  // Parent of each child of vertex 1 is 1.
  for (VertexId child : tree.neighbors(1))
    if (child != 0) {
      const auto& back = tree.neighbors(child);
      CHECK(std::find(back.begin(), back.end(), VertexId{1}) != back.end());
    }
  CHECK_THROWS_AS(tree_regular(0), std::invalid_argument);

  // Degree 2 is the integer line in disguise.
  const GraphOracle line = tree_regular(2);
  const FiniteDomain b5 = ball(line, 0, 5);
  CHECK(b5.vertices().size() == 11);
  for (VertexId v : b5.interior()) CHECK(line.valence(v) == 2);
}

TEST_CASE("row graph valences and distances") {
  const GraphOracle rows = figure1();
  CHECK(rows.valence(0) == 2);                      // row 1
  CHECK(rows.valence(figure1_encode(4, 2)) == 8);   // row 4: 3 + 5 neighbors
  const auto dist = bfs_distances(rows, 0, 4);
  for (std::uint64_t row = 1; row <= 5; ++row)
    for (std::uint64_t off = 0; off < row; ++off)
      CHECK(dist.at(figure1_encode(row, off)) == static_cast<int>(row - 1));
}

TEST_CASE("edge-list files load with comments, blanks, and dedup") {
  const auto path = temp_file("heatgraph_edges_ok.txt");
  write_file(path,
             "# a triangle with a tail\n"
             "0 1\n"
             "1 2\n"
             "2 0   # closing edge\n"
             "\n"
             "0 3\n"
             "1 0\n");
  const GraphOracle g = load_edge_list(path.string());
  CHECK(g.name() == path.string());
  CHECK(g.root() == 0);
  CHECK(g.valence(0) == 3);
  CHECK(g.valence(1) == 2);
  CHECK(g.valence(3) == 1);
  std::filesystem::remove(path);
}

TEST_CASE("edge-list files reject malformed input") {
  const auto loop_path = temp_file("heatgraph_edges_loop.txt");
  write_file(loop_path, "0 1\n4 4\n");
  CHECK_THROWS_WITH_AS(load_edge_list(loop_path.string()), doctest::Contains("self-loop"),
                       GraphStructureError);
  std::filesystem::remove(loop_path);

  const auto token_path = temp_file("heatgraph_edges_token.txt");
  write_file(token_path, "0 x\n");
  CHECK_THROWS_AS(load_edge_list(token_path.string()), GraphStructureError);
  std::filesystem::remove(token_path);

  const auto extra_path = temp_file("heatgraph_edges_extra.txt");
  write_file(extra_path, "0 1 2\n");
  CHECK_THROWS_AS(load_edge_list(extra_path.string()), GraphStructureError);
  std::filesystem::remove(extra_path);

  const auto empty_path = temp_file("heatgraph_edges_empty.txt");
  write_file(empty_path, "# nothing here\n\n");
  CHECK_THROWS_WITH_AS(load_edge_list(empty_path.string()),
                       doctest::Contains("contains no edges"), GraphStructureError);
  std::filesystem::remove(empty_path);

  CHECK_THROWS_WITH_AS(load_edge_list("/nonexistent/heatgraph.edges"),
                       doctest::Contains("cannot open"), GraphStructureError);
}
