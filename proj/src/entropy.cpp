#include "betent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "betent/error.hpp"

namespace betent {

std::string_view to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::degree: return "deg";
    case EntropyKind::betweenness: return "bet";
    case EntropyKind::partition: return "partition";
  }
  return "?";
}

std::optional<EntropyKind> parse_entropy_kind(std::string_view name) {
  for (EntropyKind k : kAllEntropyKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::invalid_argument, fmt::format("probability {} outside [0, 1]", x));
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::invalid_argument, fmt::format("invalid distribution: probabilities sum to {}", sum));
  }
}

ProbabilityVector ProbabilityVector::from_weights(std::span<const double> weights) {
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;  // summed in sorted order: independent of vertex order
  for (double w : sorted) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::invalid_argument, "negative or non-finite weight");
    total += w;
  }
  if (total == 0.0) throw Error(ErrorKind::degenerate, "all weights are zero");
  std::vector<double> p;
  p.reserve(weights.size());
  for (double w : weights) p.push_back(w / total);
  return ProbabilityVector(std::move(p), Trusted{});
}

double shannon(const ProbabilityVector& p) {
  std::vector<double> sorted(p.values().begin(), p.values().end());
  std::sort(sorted.begin(), sorted.end());
  double h = 0.0;
  for (double x : sorted) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double shannon(std::span<const double> p) {
  return shannon(ProbabilityVector(std::vector<double>(p.begin(), p.end())));
}

Partition degree_partition(const Graph& g) {
  std::map<std::size_t, std::vector<Vertex>> by_degree;
  for (Vertex v = 0; v < g.num_vertices(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition part;
  for (auto& [deg, cell] : by_degree) part.cells.push_back(std::move(cell));
  return part;
}

void validate_partition(const Graph& g, const Partition& part) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::size_t covered = 0;
  for (const auto& cell : part.cells) {
    if (cell.empty()) throw Error(ErrorKind::invalid_argument, "invalid partition: empty cell");
    for (Vertex v : cell) {
      if (v >= g.num_vertices()) throw Error(ErrorKind::invalid_argument, "invalid partition: vertex out of range");
      if (seen[v]) throw Error(ErrorKind::invalid_argument, "invalid partition: vertex '" + g.label(v) + "' in two cells");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != g.num_vertices()) {
    throw Error(ErrorKind::invalid_argument, fmt::format("invalid partition: covers {} of {} vertices", covered,
                                                         g.num_vertices()));
  }
}

ProbabilityVector degree_distribution(const Graph& g) {
  if (g.num_edges() == 0) throw Error(ErrorKind::degenerate, "degree entropy undefined: graph has no edges");
  return ProbabilityVector::from_counts(std::span<const std::size_t>(degrees(g).degree));
}

double degree_entropy(const Graph& g) { return shannon(degree_distribution(g)); }

ProbabilityVector partition_distribution(const Graph& g, const Partition& part) {
  validate_partition(g, part);
  std::vector<std::size_t> sizes;
  sizes.reserve(part.cells.size());
  for (const auto& cell : part.cells) sizes.push_back(cell.size());
  return ProbabilityVector::from_counts(std::span<const std::size_t>(sizes));
}

double partition_entropy(const Graph& g, const Partition& part) { return shannon(partition_distribution(g, part)); }

ProbabilityVector betweenness_distribution(const PathCounts& counts) {
  const bool all_zero = std::all_of(counts.upsilon.begin(), counts.upsilon.end(), [](PathCount u) { return u == 0; });
  if (all_zero) {
    throw Error(ErrorKind::degenerate,
                "degenerate betweenness distribution: no vertex lies inside any shortest path");
  }
  return ProbabilityVector::from_counts(std::span<const PathCount>(counts.upsilon));
}

double betweenness_entropy(const PathCounts& counts) { return shannon(betweenness_distribution(counts)); }

double betweenness_entropy(const Graph& g, const CentralityOptions& options) {
  return betweenness_entropy(path_counts(g, options));
}

Partition orbit_partition_oracle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kOrbitOracleMaxVertices) {
    throw Error(ErrorKind::size_limit, fmt::format("orbit oracle limited to {} vertices, got {}", kOrbitOracleMaxVertices, n));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  std::function<Vertex(Vertex)> root = [&](Vertex v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };

  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      for (Vertex v = 0; v < n; ++v) parent[root(v)] = root(image[v]);
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(static_cast<Vertex>(i))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = adj[i][j] == adj[c][image[j]];
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);

  std::map<Vertex, std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < n; ++v) orbits[root(v)].push_back(v);
  Partition part;
  for (auto& [r, cell] : orbits) part.cells.push_back(std::move(cell));
  std::sort(part.cells.begin(), part.cells.end());
  return part;
}

EntropyReport compute_entropies(const Graph& g, std::span<const EntropyKind> kinds, const CentralityOptions& options) {
  EntropyReport report;
  for (EntropyKind kind : kinds) {
    EntropyValue& slot = report.values[kind];
    try {
      std::optional<ProbabilityVector> p;
      switch (kind) {
        case EntropyKind::degree: p = degree_distribution(g); break;
        case EntropyKind::betweenness: p = betweenness_distribution(path_counts(g, options)); break;
        case EntropyKind::partition: p = partition_distribution(g, degree_partition(g)); break;
      }
      slot.value = shannon(*p);
      slot.probabilities.assign(p->values().begin(), p->values().end());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate) throw;
      slot.undefined_reason = e.what();
    }
  }
  return report;
}

}  // namespace betent
