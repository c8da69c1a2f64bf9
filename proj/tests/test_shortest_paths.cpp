#include <doctest.h>

#include <random>

#include "betent/centrality.hpp"
#include "betent/error.hpp"
#include "betent/shortest_paths.hpp"
#include "support/graphs.hpp"

using namespace betent;
using namespace betent::testing;

TEST_CASE("C4: opposite vertex reached two ways") {
  Graph g = cycle_graph(4);
  for (Vertex s = 0; s < 4; ++s) {
    SsspResult r = sssp(g, s);
    Vertex opposite = (s + 2) % 4;
    CHECK(r.dist[opposite] == 2.0);
    CHECK(r.sigma[opposite] == 2);
    CHECK(r.sigma[s] == 1);
    CHECK(r.dist[s] == 0.0);
  }
}

TEST_CASE("P3 from an end") {
  Graph g = edgelist("a b\nb c");
  SsspResult r = sssp(g, g.index_of("a"));
  CHECK(r.dist[g.index_of("c")] == 2.0);
  CHECK(r.sigma[g.index_of("c")] == 1);
}

TEST_CASE("weighted triangle with a tie") {
  Graph g = edgelist("a b 1\nb c 1\na c 2.0");
  SsspResult r = sssp(g, g.index_of("a"));
  CHECK(r.dist[g.index_of("c")] == 2.0);
  CHECK(r.sigma[g.index_of("c")] == 2);
}

TEST_CASE("floating-point sums tie within tolerance") {
  // 0.1 + 0.2 != 0.3 in binary, but the two routes are the same length
  Graph g = edgelist("s a 0.1\na t 0.2\ns t 0.3");
  SsspResult r = sssp(g, g.index_of("s"));
  CHECK(r.sigma[g.index_of("t")] == 2);
}

TEST_CASE("unreachable vertices") {
  Graph g = edgelist("a b\nc d");
  SsspResult r = sssp(g, g.index_of("a"));
  CHECK(r.dist[g.index_of("c")] == kUnreachable);
  CHECK(r.sigma[g.index_of("d")] == 0);
  CHECK(r.order.size() == 2);
  CHECK_THROWS_AS(sssp(g, Vertex{9}), Error);
}

TEST_CASE("downstream path counts") {
  SUBCASE("P3 from a") {
    Graph g = edgelist("a b\nb c");
    SsspResult r = sssp(g, g.index_of("a"));
    auto down = downstream_path_counts(r);
    CHECK(down[g.index_of("b")] == 1);
    CHECK(r.sigma[g.index_of("b")] * down[g.index_of("b")] == 1);
    CHECK(down[g.index_of("a")] == 2);
  }
  SUBCASE("star from a leaf") {
    Graph g = star_graph(3);
    SsspResult r = sssp(g, 1);
    auto down = downstream_path_counts(r);
    CHECK(down[0] == 2);
    CHECK(r.sigma[0] * down[0] == 2);
  }
  SUBCASE("C4: each neighbour of the source carries one through-path") {
    Graph g = cycle_graph(4);
    SsspResult r = sssp(g, 0);
    auto down = downstream_path_counts(r);
    CHECK(r.sigma[1] * down[1] == 1);
    CHECK(r.sigma[3] * down[3] == 1);
    CHECK(r.sigma[2] * down[2] == 0);
    CHECK(down[0] == 4);  // 1 + 1 + 2 shortest paths out of vertex 0
  }
}

TEST_CASE("source total equals the sum of sigma") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 12, 0.2, trial % 2 ? WeightMode::small_integers : WeightMode::unit);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      SsspResult r = sssp(g, s);
      PathCount sum = 0;
      for (Vertex t = 0; t < g.num_vertices(); ++t)
        if (t != s) sum += r.sigma[t];
      REQUIRE(downstream_path_counts(r)[s] == sum);
    }
  }
}

TEST_CASE("DAG invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 14, 0.2, trial % 2 ? WeightMode::tenths : WeightMode::continuous);
    SsspResult r = sssp(g, static_cast<Vertex>(trial % 14));
    std::vector<PathCount> from_preds(g.num_vertices(), 0);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex w : r.dag_succ[u]) {
        REQUIRE(r.dist[w] > r.dist[u]);
        from_preds[w] += r.sigma[u];
      }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v != r.source) REQUIRE(from_preds[v] == r.sigma[v]);
    }
  }
}

TEST_CASE("sigma matches exhaustive enumeration") {
  std::mt19937_64 rng(42);
  const WeightMode modes[] = {WeightMode::unit, WeightMode::small_integers, WeightMode::tenths, WeightMode::continuous};
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(rng, 4 + trial % 9, 0.3, modes[trial % 4]);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      SsspResult r = sssp(g, s);
      for (Vertex t = 0; t < g.num_vertices(); ++t) {
        if (t == s) continue;
        REQUIRE(r.sigma[t] == enumerate_shortest_paths(g, s, t).size());
      }
    }
  }
}

TEST_CASE("scaling weights scales distances only") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(rng, 12, 0.25, WeightMode::small_integers);
    Graph h = scaled(g, 7.3);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      SsspResult a = sssp(g, s);
      SsspResult b = sssp(h, s);
      CHECK(a.sigma == b.sigma);
      CHECK(a.dag_succ == b.dag_succ);
      for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(b.dist[v] == doctest::Approx(a.dist[v] * 7.3));
    }
  }
}

TEST_CASE("BFS and unit-weight Dijkstra agree exactly") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(rng, 25, 0.1, WeightMode::unit);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      SsspResult a = sssp(g, s, Traversal::bfs);
      SsspResult b = sssp(g, s, Traversal::dijkstra);
      CHECK(a.dist == b.dist);
      CHECK(a.sigma == b.sigma);
      CHECK(a.dag_succ == b.dag_succ);
      CHECK(a.order == b.order);
    }
  }
}

TEST_CASE("overflow is detected") {
  CHECK_THROWS_AS(checked_add(~PathCount{0}, 1), Error);
  CHECK_THROWS_AS(checked_mul(PathCount{1} << 40, PathCount{1} << 40), Error);
  CHECK(checked_mul(3, 5) == 15);

  // a chain of 70 diamonds has 2^70 shortest paths end to end
  GraphBuilder b;
  Vertex prev = b.add_vertex("n0");
  for (int i = 1; i <= 70; ++i) {
    Vertex up = b.add_vertex("u" + std::to_string(i));
    Vertex down = b.add_vertex("d" + std::to_string(i));
    Vertex next = b.add_vertex("n" + std::to_string(i));
    b.add_edge(prev, up);
    b.add_edge(prev, down);
    b.add_edge(up, next);
    b.add_edge(down, next);
    prev = next;
  }
  Graph g = std::move(b).build();
  try {
    sssp(g, 0);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
}
