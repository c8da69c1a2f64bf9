#include "betent/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>

#include "betent/error.hpp"

namespace betent {

bool same_length(double a, double b) noexcept {
  return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

PathCount checked_add(PathCount a, PathCount b) {
  PathCount r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "shortest-path count overflow");
  return r;
}

PathCount checked_mul(PathCount a, PathCount b) {
  PathCount r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "shortest-path count overflow");
  return r;
}

SsspEngine::SsspEngine(const Graph& g, Traversal traversal)
    : g_(g),
      weighted_(traversal == Traversal::dijkstra || (traversal == Traversal::automatic && g.is_weighted())) {
  const std::size_t n = g.num_vertices();
  r_.dist.resize(n);
  r_.sigma.resize(n);
  r_.dag_succ.resize(n);
  r_.order.reserve(n);
  queue_.reserve(n);
}

const SsspResult& SsspEngine::run(Vertex source) {
  if (source >= g_.num_vertices()) {
    throw Error(ErrorKind::unknown_vertex, "unknown source vertex " + std::to_string(source));
  }
  r_.source = source;
  std::fill(r_.dist.begin(), r_.dist.end(), kUnreachable);
  std::fill(r_.sigma.begin(), r_.sigma.end(), PathCount{0});
  for (auto& s : r_.dag_succ) s.clear();
  r_.order.clear();
  if (weighted_) {
    dijkstra(source);
  } else {
    bfs(source);
  }
  build_dag();
  return r_;
}

void SsspEngine::bfs(Vertex source) {
  queue_.clear();
  r_.dist[source] = 0.0;
  queue_.push_back(source);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex u = queue_[head];
    for (const Arc& a : g_.neighbors(u)) {
      if (r_.dist[a.to] == kUnreachable) {
        r_.dist[a.to] = r_.dist[u] + 1.0;
        queue_.push_back(a.to);
      }
    }
  }
  r_.order.assign(queue_.begin(), queue_.end());
  // queue is already grouped by level; sort each level by index
  auto first = r_.order.begin();
  while (first != r_.order.end()) {
    double d = r_.dist[*first];
    auto last = std::find_if(first, r_.order.end(),
                             [&](Vertex v) { return r_.dist[v] != d; });
    std::sort(first, last);
    first = last;
  }
}

void SsspEngine::dijkstra(Vertex source) {
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<bool>& done = settled_;
  done.assign(g_.num_vertices(), false);
  r_.dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    r_.order.push_back(u);
    for (const Arc& a : g_.neighbors(u)) {
      if (done[a.to]) continue;
      double nd = d + a.weight;
      double& cur = r_.dist[a.to];
      // an alternative within tie tolerance keeps the first-found length
      if (cur == kUnreachable || (nd < cur && !same_length(nd, cur))) {
        cur = nd;
        heap.emplace(nd, a.to);
      }
    }
  }
}

void SsspEngine::build_dag() {
  r_.sigma[r_.source] = 1;
  for (Vertex u : r_.order) {
    const double du = r_.dist[u];
    for (const Arc& a : g_.neighbors(u)) {
      const double dw = r_.dist[a.to];
      bool on_dag = weighted_ ? (dw > du && same_length(du + a.weight, dw)) : (dw == du + 1.0);
      if (on_dag) {
        r_.dag_succ[u].push_back(a.to);
        r_.sigma[a.to] = checked_add(r_.sigma[a.to], r_.sigma[u]);
      }
    }
  }
}

SsspResult sssp(const Graph& g, Vertex s, Traversal traversal) {
  SsspEngine engine(g, traversal);
  return engine.run(s);
}

void downstream_path_counts(const SsspResult& r, PairConvention convention, std::span<PathCount> out) {
  std::fill(out.begin(), out.end(), PathCount{0});
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    PathCount acc = 0;
    for (Vertex w : r.dag_succ[v]) {
      const PathCount ends_here = (convention == PairConvention::ordered || w > r.source) ? 1 : 0;
      acc = checked_add(acc, checked_add(ends_here, out[w]));
    }
    out[v] = acc;
  }
}

std::vector<PathCount> downstream_path_counts(const SsspResult& r, PairConvention convention) {
  std::vector<PathCount> out(r.dist.size());
  downstream_path_counts(r, convention, out);
  return out;
}

}  // namespace betent
