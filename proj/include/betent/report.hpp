#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "betent/datasets.hpp"
#include "betent/robustness.hpp"

namespace betent {

inline constexpr std::string_view kToolName = "betent";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct GraphSummary {
  std::string source;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool weighted = false;
};

GraphSummary summarize(const Graph& g, std::string source);

/// Log base, pair convention, tie tolerance and friends. Present in every JSON report.
nlohmann::json conventions_json();

/// Top-level keys: tool, graph, conventions, entropies and, when `loss` is given, loss_rows.
nlohmann::json report_json(const GraphSummary& graph, const EntropyReport& entropies, const LossTable* loss = nullptr);
nlohmann::json verify_json(const VerifyResult& result);

/// Table output rounds entropies to 4 decimals; CSV and JSON keep full precision.
std::string render_entropies(const GraphSummary& graph, const EntropyReport& entropies, OutputFormat format);
std::string render_loss(const GraphSummary& graph, const LossTable& table, OutputFormat format);
std::string render_verify(const VerifyResult& result, OutputFormat format);
std::string render_datasets(OutputFormat format);

}  // namespace betent
