#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betent/entropy.hpp"
#include "betent/io.hpp"

namespace betent {

/// A registered network with the counts and entropies it is expected to reproduce.
struct DatasetEntry {
  std::string name;
  std::string description;
  std::size_t expected_nodes = 0;
  std::size_t expected_edges = 0;
  std::optional<std::string_view> embedded;  // graph text, when built in
  GraphFormat format = GraphFormat::edgelist;
  std::map<EntropyKind, double> expected_entropy;
  std::map<EntropyKind, double> tolerance;
};

const std::vector<DatasetEntry>& dataset_registry();
const DatasetEntry* find_dataset(std::string_view name);

/// Zachary karate club, labels "1".."34", 78 unweighted edges.
std::string_view karate_edgelist();
/// Petersen graph, labels "1".."10": 3-regular, 15 edges.
std::string_view petersen_edgelist();

/// Throws Error(invalid_argument) if the entry has no embedded data.
Graph load_embedded(const DatasetEntry& entry);

struct CountCheck {
  std::size_t expected_nodes = 0;
  std::size_t expected_edges = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  /// "undirected" if m matched, "arcs" if 2m matched, empty if neither.
  std::string edge_convention;

  bool ok() const { return nodes == expected_nodes && !edge_convention.empty(); }
};

struct EntropyCheck {
  EntropyKind kind{};
  double expected = 0.0;
  double tolerance = 0.0;
  std::optional<double> actual;
  std::string undefined_reason;

  bool within() const { return actual && std::abs(*actual - expected) <= tolerance; }
};

struct VerifyResult {
  std::string dataset;
  CountCheck counts;
  std::vector<EntropyCheck> entropies;

  /// Entropy comparisons only count once the counts match; otherwise they
  /// are informational and the counts mismatch alone fails verification.
  bool informational() const { return !counts.ok(); }
  bool passed() const;
};

VerifyResult verify_dataset(const DatasetEntry& entry, const Graph& g, const CentralityOptions& options = {});

}  // namespace betent
