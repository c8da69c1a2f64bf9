#include "betent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "betent/error.hpp"

namespace betent {

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::unknown_vertex, "unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (const Arc& a : neighbors(u)) {
      if (u < a.to) out.push_back({u, a.to, a.weight});
    }
  }
  return out;
}

Graph Graph::with_unit_weights() const {
  Graph g = *this;
  for (Arc& a : g.targets_) a.weight = 1.0;
  g.weighted_ = false;
  return g;
}

Graph Graph::with_weighted_flag(bool weighted) const {
  Graph g = *this;
  g.weighted_ = weighted;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.labels_ != b.labels_ || a.offsets_ != b.offsets_ || a.weighted_ != b.weighted_) return false;
  return std::equal(a.targets_.begin(), a.targets_.end(), b.targets_.begin(), b.targets_.end(),
                    [](const Arc& x, const Arc& y) { return x.to == y.to && x.weight == y.weight; });
}

Vertex GraphBuilder::add_vertex(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<Vertex>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v, double weight) {
  Vertex a = add_vertex(u);
  Vertex b = add_vertex(v);
  add_edge(a, b, weight);
}

void GraphBuilder::add_edge(Vertex u, Vertex v, double weight) {
  if (u >= labels_.size() || v >= labels_.size()) {
    throw Error(ErrorKind::unknown_vertex, "edge endpoint out of range");
  }
  if (!std::isfinite(weight) || weight <= 0.0) {
    throw Error(ErrorKind::parse, "nonpositive weight on edge " + labels_[u] + " - " + labels_[v]);
  }
  if (u == v) {
    warnings_.push_back("dropped self-loop on vertex '" + labels_[u] + "'");
    return;
  }
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, weight});
}

Graph GraphBuilder::build() && {
  if (labels_.empty()) throw Error(ErrorKind::parse, "empty graph");

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.weight) < std::tie(b.u, b.v, b.weight);
  });
  // after sorting, the first of each (u, v) run carries the minimum weight
  auto last = std::unique(edges_.begin(), edges_.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; });
  edges_.erase(last, edges_.end());

  const std::size_t n = labels_.size();
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges_) {
    g.targets_[cursor[e.u]++] = {e.v, e.weight};
    g.targets_[cursor[e.v]++] = {e.u, e.weight};
    if (e.weight != 1.0) g.weighted_ = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  return g;
}

std::size_t DegreeVector::total() const noexcept {
  return std::accumulate(degree.begin(), degree.end(), std::size_t{0});
}

DegreeVector degrees(const Graph& g) {
  DegreeVector d;
  d.degree.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.degree[v] = g.degree(v);
  return d;
}

Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorKind::unknown_vertex, "unknown vertex index " + std::to_string(v));
  }
  if (g.num_vertices() == 1) throw Error(ErrorKind::invalid_argument, "cannot remove the only vertex");
  GraphBuilder b;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (u != v) b.add_vertex(g.label(u));
  }
  auto shifted = [v](Vertex u) { return u > v ? u - 1 : u; };
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) b.add_edge(shifted(e.u), shifted(e.v), e.weight);
  }
  return std::move(b).build();
}

Graph remove_vertex(const Graph& g, std::string_view label) {
  return remove_vertex(g, g.index_of(label));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const Arc& a : g.neighbors(u)) {
        if (!seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace betent
