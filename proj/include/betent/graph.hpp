#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace betent {

/// Dense vertex index, 0..n-1.
using Vertex = std::uint32_t;

struct Arc {
  Vertex to;
  double weight;  // edge length, strictly positive
};

struct Edge {
  Vertex u;
  Vertex v;
  double weight;
};

class GraphBuilder;

/// Immutable undirected weighted graph with stable string labels.
///
/// Adjacency is stored in CSR form with each neighbor list sorted by index, so
/// every traversal is deterministic. Parallel edges never exist (the builder
/// merges them) and neither do self-loops.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return labels_.empty(); }

  /// True if any edge weight differs from 1.
  bool is_weighted() const noexcept { return weighted_; }

  std::span<const Arc> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws Error(unknown_vertex).
  Vertex index_of(std::string_view label) const;

  /// Each undirected edge once, with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;

  /// Copy with every weight set to 1 (is_weighted() becomes false).
  Graph with_unit_weights() const;
  /// Copy whose is_weighted() flag is forced; weights are untouched.
  Graph with_weighted_flag(bool weighted) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> targets_;
  bool weighted_ = false;
};

/// Accumulates vertices and edges, then produces a Graph satisfying all invariants.
///
/// Parallel edges keep the minimum weight; self-loops are dropped and reported
/// through warnings(). Weights must be finite and strictly positive.
class GraphBuilder {
 public:
  /// Returns the index of the label, adding it if new.
  Vertex add_vertex(std::string_view label);
  void add_edge(std::string_view u, std::string_view v, double weight = 1.0);
  void add_edge(Vertex u, Vertex v, double weight = 1.0);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Throws Error(parse) for an empty graph.
  Graph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::vector<std::string> warnings_;
};

/// Per-vertex incident-edge counts; weights are ignored.
struct DegreeVector {
  std::vector<std::size_t> degree;

  std::size_t total() const noexcept;
};

DegreeVector degrees(const Graph& g);

/// New graph without v and its incident edges. Remaining vertices keep their
/// labels, relative order and weights. Throws Error(unknown_vertex).
Graph remove_vertex(const Graph& g, Vertex v);
Graph remove_vertex(const Graph& g, std::string_view label);

/// Maximal connected vertex sets. Components are ordered by smallest member,
/// members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace betent
