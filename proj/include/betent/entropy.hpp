#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betent/centrality.hpp"
#include "betent/graph.hpp"

namespace betent {

enum class EntropyKind { degree, betweenness, partition };

inline constexpr std::array<EntropyKind, 3> kAllEntropyKinds{EntropyKind::degree, EntropyKind::betweenness,
                                                             EntropyKind::partition};

/// "deg", "bet", "partition".
std::string_view to_string(EntropyKind kind);
std::optional<EntropyKind> parse_entropy_kind(std::string_view name);

/// A discrete distribution: entries in [0, 1] summing to 1 within 1e-9.
class ProbabilityVector {
 public:
  /// Throws Error(invalid_argument) if p is not a distribution.
  explicit ProbabilityVector(std::vector<double> p);

  /// Normalizes nonnegative weights. Throws Error(degenerate) if they sum to zero.
  static ProbabilityVector from_weights(std::span<const double> weights);
  template <typename Count>
  static ProbabilityVector from_counts(std::span<const Count> counts) {
    std::vector<double> w(counts.begin(), counts.end());
    return from_weights(w);
  }

  std::span<const double> values() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }

 private:
  struct Trusted {};
  ProbabilityVector(std::vector<double> p, Trusted) : p_(std::move(p)) {}

  std::vector<double> p_;
};

/// H = -sum p ln p in nats, with 0 ln 0 = 0.
///
/// Terms are summed in ascending order of p, so the result depends only on
/// the multiset of probabilities and is bit-identical under any permutation.
double shannon(const ProbabilityVector& p);
/// Validating overload; throws Error(invalid_argument) if sum(p) is off by more than 1e-9.
double shannon(std::span<const double> p);

/// Disjoint nonempty cells covering the vertex set.
struct Partition {
  std::vector<std::vector<Vertex>> cells;
};

/// Vertices grouped by degree; cells by ascending degree, members ascending.
Partition degree_partition(const Graph& g);

/// Throws Error(invalid_argument) on overlap, gaps, empty cells or out-of-range vertices.
void validate_partition(const Graph& g, const Partition& part);

/// p_j = degree(j) / sum of degrees. Throws Error(degenerate) on an edgeless graph.
ProbabilityVector degree_distribution(const Graph& g);
double degree_entropy(const Graph& g);

/// p_k = |cell k| / n.
ProbabilityVector partition_distribution(const Graph& g, const Partition& part);
double partition_entropy(const Graph& g, const Partition& part);

/// p_i = upsilon(i) / sum of upsilon. Throws Error(degenerate) if every
/// upsilon is zero (no vertex is interior to any shortest path).
ProbabilityVector betweenness_distribution(const PathCounts& counts);
double betweenness_entropy(const PathCounts& counts);
double betweenness_entropy(const Graph& g, const CentralityOptions& options = {});

inline constexpr std::size_t kOrbitOracleMaxVertices = 10;

/// Exact automorphism orbits of the unweighted structure by exhaustive
/// search. Test oracle; throws Error(size_limit) above 10 vertices.
/// Cells ordered by smallest member.
Partition orbit_partition_oracle(const Graph& g);

/// One entropy measurement. `value` is empty when the measure is undefined
/// on this graph, in which case `undefined_reason` says why.
struct EntropyValue {
  std::optional<double> value;
  std::vector<double> probabilities;
  std::string undefined_reason;
};

struct EntropyReport {
  std::map<EntropyKind, EntropyValue> values;

  const EntropyValue* find(EntropyKind kind) const {
    auto it = values.find(kind);
    return it == values.end() ? nullptr : &it->second;
  }
};

/// Computes the requested entropies. Degenerate measures are reported as
/// undefined instead of throwing; other errors propagate.
EntropyReport compute_entropies(const Graph& g, std::span<const EntropyKind> kinds,
                                const CentralityOptions& options = {});

}  // namespace betent
