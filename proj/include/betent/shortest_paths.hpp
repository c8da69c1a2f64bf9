#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "betent/graph.hpp"

namespace betent {

/// Shortest-path multiplicity. Overflow is detected and raised as Error(overflow).
using PathCount = std::uint64_t;

/// Relative tolerance under which two weighted path lengths count as a tie.
inline constexpr double kTieTolerance = 1e-9;

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

bool same_length(double a, double b) noexcept;

PathCount checked_add(PathCount a, PathCount b);
PathCount checked_mul(PathCount a, PathCount b);

/// Whether each unordered pair {s,t} is counted once per direction or once in total.
enum class PairConvention { ordered, unordered };

enum class Traversal {
  automatic,  // BFS when the graph is unweighted, Dijkstra otherwise
  bfs,        // treats every edge as length 1
  dijkstra,
};

/// Single-source shortest-path DAG with path multiplicities.
struct SsspResult {
  Vertex source = 0;
  std::vector<double> dist;       // kUnreachable if not reached
  std::vector<PathCount> sigma;   // 0 if not reached
  std::vector<std::vector<Vertex>> dag_succ;
  std::vector<Vertex> order;      // reached vertices by (dist, index); a topological order of the DAG
};

/// Reusable single-source solver. Keeps its buffers between calls, so one
/// engine per worker avoids reallocating for every source.
class SsspEngine {
 public:
  explicit SsspEngine(const Graph& g, Traversal traversal = Traversal::automatic);

  /// The returned reference is valid until the next run().
  const SsspResult& run(Vertex source);

 private:
  void bfs(Vertex source);
  void dijkstra(Vertex source);
  void build_dag();

  const Graph& g_;
  bool weighted_;
  SsspResult r_;
  std::vector<Vertex> queue_;
  std::vector<bool> settled_;
};

/// Throws Error(unknown_vertex) if s is out of range.
SsspResult sssp(const Graph& g, Vertex s, Traversal traversal = Traversal::automatic);

/// Per-vertex g_s(v): the number of DAG paths leaving v and ending at some
/// target t, i.e. sum over t of (shortest v->t paths lying on an s->t shortest path).
///
/// g_s(source) is the total number of shortest paths out of the source. With
/// PairConvention::unordered only targets whose index exceeds the source are counted.
std::vector<PathCount> downstream_path_counts(const SsspResult& r,
                                              PairConvention convention = PairConvention::ordered);
void downstream_path_counts(const SsspResult& r, PairConvention convention, std::span<PathCount> out);

}  // namespace betent
