#pragma once

#include <vector>

#include "betent/graph.hpp"
#include "betent/shortest_paths.hpp"

namespace betent {

/// Through-path counts.
///
/// upsilon[i] is the number of shortest paths, over all source/target pairs
/// with s != i != t, that pass through i as an interior vertex. total_paths is
/// the sum of sigma_st over the same pairs. Pairs with no connecting path
/// contribute nothing.
struct PathCounts {
  std::vector<PathCount> upsilon;
  PathCount total_paths = 0;
  PairConvention convention = PairConvention::ordered;

  friend bool operator==(const PathCounts&, const PathCounts&) = default;
};

/// bet[i] = upsilon[i] / total_paths. Each entry lies in [0, 1].
struct BetweennessVector {
  std::vector<double> bet;
};

struct CentralityOptions {
  unsigned threads = 1;  // 0 = one per hardware thread
  PairConvention convention = PairConvention::ordered;
  Traversal traversal = Traversal::automatic;
};

/// One shortest-path DAG plus one downstream accumulation per source. The
/// result is bit-identical for every thread count. Throws Error(overflow).
PathCounts path_counts(const Graph& g, const CentralityOptions& options = {});

/// Throws Error(degenerate) when total_paths is zero (no edges).
BetweennessVector betweenness(const PathCounts& counts);
BetweennessVector betweenness(const Graph& g, const CentralityOptions& options = {});

/// Every shortest s->t path, as vertex sequences, found by exhaustive DFS
/// against Floyd-Warshall distances. Test oracle; exponential in n.
std::vector<std::vector<Vertex>> enumerate_shortest_paths(const Graph& g, Vertex s, Vertex t);

inline constexpr std::size_t kBruteForceMaxVertices = 14;

/// Counts interior crossings over every enumerated shortest path. Independent
/// of the SSSP engine; must equal path_counts() exactly.
/// Throws Error(size_limit) above kBruteForceMaxVertices.
PathCounts brute_force_path_counts(const Graph& g, PairConvention convention = PairConvention::ordered);

}  // namespace betent
