#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betent/entropy.hpp"

namespace betent {

/// Entropy of the graph after one removal, and the loss relative to baseline.
/// Both are empty when either side is undefined.
struct LossCell {
  std::optional<double> h_after;
  std::optional<double> i_loss;  // baseline - h_after
  std::string undefined_reason;
};

struct LossRow {
  Vertex vertex = 0;
  std::string label;
  std::size_t degree = 0;
  std::optional<double> bet;  // betweenness in the intact graph
  std::map<EntropyKind, LossCell> cells;
};

struct LossTable {
  EntropyReport baseline;
  std::vector<EntropyKind> kinds;
  std::vector<LossRow> rows;  // vertex index order
};

struct LossOptions {
  unsigned threads = 1;  // 0 = one per hardware thread
};

/// Removes each vertex in turn and recomputes the requested entropies from
/// scratch. Throws Error(invalid_argument) for graphs with fewer than 3 vertices.
LossTable information_loss(const Graph& g, std::span<const EntropyKind> kinds, const LossOptions& options = {});

/// Same, restricted to the listed vertices (rows in the listed order).
LossTable information_loss(const Graph& g, std::span<const EntropyKind> kinds, std::span<const Vertex> vertices,
                           const LossOptions& options = {});

enum class RankOrder {
  signed_loss,    // largest i_loss first
  absolute_loss,  // largest |i_loss| first
};

/// Vertices by descending loss; ties by ascending label (numeric labels
/// compare numerically); undefined cells last. Throws Error(invalid_argument)
/// if the table lacks `kind`.
std::vector<Vertex> rank_by_loss(const LossTable& table, EntropyKind kind, RankOrder order = RankOrder::signed_loss);

/// Label ordering used for ties: integers numerically, then everything else lexicographically.
bool label_less(const std::string& a, const std::string& b);

}  // namespace betent
