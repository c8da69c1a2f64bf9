#include "betent/centrality.hpp"

#include <algorithm>
#include <memory>

#include "betent/error.hpp"
#include "betent/parallel.hpp"

namespace betent {

PathCounts path_counts(const Graph& g, const CentralityOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "path counts of an empty graph");

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(options.threads), n));
  struct Local {
    std::vector<PathCount> upsilon;
    PathCount total = 0;
  };
  std::vector<Local> locals(workers, Local{std::vector<PathCount>(n, 0), 0});
  std::vector<std::unique_ptr<SsspEngine>> engines(workers);
  std::vector<std::vector<PathCount>> downstream(workers, std::vector<PathCount>(n));

  parallel_for(n, workers, [&](unsigned w, std::size_t s_index) {
    if (!engines[w]) engines[w] = std::make_unique<SsspEngine>(g, options.traversal);
    const Vertex s = static_cast<Vertex>(s_index);
    const SsspResult& r = engines[w]->run(s);
    auto& down = downstream[w];
    downstream_path_counts(r, options.convention, down);
    Local& local = locals[w];
    local.total = checked_add(local.total, down[s]);
    for (Vertex v : r.order) {
      if (v == s || down[v] == 0) continue;
      local.upsilon[v] = checked_add(local.upsilon[v], checked_mul(r.sigma[v], down[v]));
    }
  });

  PathCounts out;
  out.convention = options.convention;
  out.upsilon.assign(n, 0);
  for (const Local& local : locals) {
    out.total_paths = checked_add(out.total_paths, local.total);
    for (std::size_t v = 0; v < n; ++v) out.upsilon[v] = checked_add(out.upsilon[v], local.upsilon[v]);
  }
  return out;
}

BetweennessVector betweenness(const PathCounts& counts) {
  if (counts.total_paths == 0) {
    throw Error(ErrorKind::degenerate, "betweenness undefined: graph has no shortest paths (no edges)");
  }
  BetweennessVector out;
  out.bet.reserve(counts.upsilon.size());
  const double total = static_cast<double>(counts.total_paths);
  for (PathCount u : counts.upsilon) out.bet.push_back(static_cast<double>(u) / total);
  return out;
}

BetweennessVector betweenness(const Graph& g, const CentralityOptions& options) {
  return betweenness(path_counts(g, options));
}

namespace {

/// All-pairs distances by Floyd-Warshall; unit lengths when the graph is unweighted.
std::vector<std::vector<double>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kUnreachable));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0.0;
    for (const Arc& a : g.neighbors(u)) d[u][a.to] = g.is_weighted() ? a.weight : 1.0;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

void enumerate_from(const Graph& g, Vertex t, double target_len, std::vector<Vertex>& path, std::vector<bool>& on_path,
                    double len, std::vector<std::vector<Vertex>>& out) {
  const Vertex u = path.back();
  if (u == t) {
    if (same_length(len, target_len)) out.push_back(path);
    return;
  }
  for (const Arc& a : g.neighbors(u)) {
    if (on_path[a.to]) continue;
    const double next = len + (g.is_weighted() ? a.weight : 1.0);
    if (next > target_len && !same_length(next, target_len)) continue;
    on_path[a.to] = true;
    path.push_back(a.to);
    enumerate_from(g, t, target_len, path, on_path, next, out);
    path.pop_back();
    on_path[a.to] = false;
  }
}

std::vector<std::vector<Vertex>> enumerate_with(const Graph& g, const std::vector<std::vector<double>>& dist, Vertex s,
                                                Vertex t) {
  std::vector<std::vector<Vertex>> out;
  if (s == t || dist[s][t] == kUnreachable) return out;
  std::vector<Vertex> path{s};
  std::vector<bool> on_path(g.num_vertices(), false);
  on_path[s] = true;
  enumerate_from(g, t, dist[s][t], path, on_path, 0.0, out);
  return out;
}

void check_oracle_size(const Graph& g) {
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw Error(ErrorKind::size_limit, "brute-force enumeration limited to " + std::to_string(kBruteForceMaxVertices) +
                                           " vertices, got " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_shortest_paths(const Graph& g, Vertex s, Vertex t) {
  check_oracle_size(g);
  if (s >= g.num_vertices() || t >= g.num_vertices()) throw Error(ErrorKind::unknown_vertex, "vertex out of range");
  return enumerate_with(g, all_pairs_distances(g), s, t);
}

PathCounts brute_force_path_counts(const Graph& g, PairConvention convention) {
  check_oracle_size(g);
  const std::size_t n = g.num_vertices();
  const auto dist = all_pairs_distances(g);
  PathCounts out;
  out.convention = convention;
  out.upsilon.assign(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || (convention == PairConvention::unordered && t < s)) continue;
      for (const auto& path : enumerate_with(g, dist, s, t)) {
        ++out.total_paths;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) ++out.upsilon[path[k]];
      }
    }
  }
  return out;
}

}  // namespace betent
