#include "betent/report.hpp"

#include <fmt/format.h>

#include "betent/shortest_paths.hpp"

namespace betent {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string fixed4(const std::optional<double>& x) { return x ? fmt::format("{:.4f}", *x) : "undefined"; }
std::string full(const std::optional<double>& x) { return x ? fmt::format("{}", *x) : ""; }

std::string column_name(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::degree: return "deg";
    case EntropyKind::betweenness: return "bet";
    case EntropyKind::partition: return "partition";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string graph_line(const GraphSummary& g) {
  return fmt::format("graph: {}  nodes={}  edges={}  weighted={}\n", g.source, g.nodes, g.edges,
                     g.weighted ? "yes" : "no");
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

GraphSummary summarize(const Graph& g, std::string source) {
  return {std::move(source), g.num_vertices(), g.num_edges(), g.is_weighted()};
}

json conventions_json() {
  return {
      {"log_base", "e"},
      {"units", "nats"},
      {"pair_convention", "ordered"},
      {"tie_tolerance", kTieTolerance},
      {"weight_semantics", "length"},
      {"partition", "degree"},
      {"information_loss", "baseline_minus_after"},
  };
}

json report_json(const GraphSummary& graph, const EntropyReport& entropies, const LossTable* loss) {
  json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["graph"] = {{"source", graph.source}, {"nodes", graph.nodes}, {"edges", graph.edges}, {"weighted", graph.weighted}};
  j["conventions"] = conventions_json();
  json ent = json::object();
  for (const auto& [kind, v] : entropies.values) {
    json e = {{"value", optional_number(v.value)}, {"probabilities", v.probabilities}};
    if (!v.value) e["undefined_reason"] = v.undefined_reason;
    ent[column_name(kind)] = e;
  }
  j["entropies"] = ent;
  if (loss) {
    json rows = json::array();
    for (const LossRow& r : loss->rows) {
      json row = {{"vertex", r.label}, {"degree", r.degree}, {"betweenness", optional_number(r.bet)}};
      for (const auto& [kind, cell] : r.cells) {
        json c = {{"h_after", optional_number(cell.h_after)}, {"i_loss", optional_number(cell.i_loss)}};
        if (!cell.i_loss) c["undefined_reason"] = cell.undefined_reason;
        row[column_name(kind)] = c;
      }
      rows.push_back(row);
    }
    j["loss_rows"] = rows;
  }
  return j;
}

std::string render_entropies(const GraphSummary& graph, const EntropyReport& entropies, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_json(graph, entropies).dump(2) + "\n";
    case OutputFormat::csv: {
      std::string out = "measure,value\n";
      for (const auto& [kind, v] : entropies.values) out += fmt::format("{},{}\n", column_name(kind), full(v.value));
      return out;
    }
    case OutputFormat::table: {
      std::string out = graph_line(graph);
      out += fmt::format("{:<12} {}\n", "measure", "entropy (nats)");
      for (const auto& [kind, v] : entropies.values) {
        out += fmt::format("{:<12} {}\n", "H_" + column_name(kind), fixed4(v.value));
      }
      return out;
    }
  }
  return {};
}

std::string render_loss(const GraphSummary& graph, const LossTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_json(graph, table.baseline, &table).dump(2) + "\n";
    case OutputFormat::csv: {
      std::string out = "vertex,betweenness,degree";
      for (EntropyKind k : table.kinds) out += fmt::format(",H_{0},I_loss_{0}", column_name(k));
      out += "\n";
      for (const LossRow& r : table.rows) {
        out += fmt::format("{},{},{}", csv_field(r.label), full(r.bet), r.degree);
        for (EntropyKind k : table.kinds) {
          const LossCell& c = r.cells.at(k);
          out += fmt::format(",{},{}", full(c.h_after), full(c.i_loss));
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = graph_line(graph);
      out += fmt::format("{:<12} {:>11} {:>6}", "vertex", "betweenness", "degree");
      for (EntropyKind k : table.kinds) {
        out += fmt::format(" {:>11} {:>11}", "H_" + column_name(k), "I_" + column_name(k));
      }
      out += "\n";
      out += fmt::format("{:<12} {:>11} {:>6}", "network", "", "");
      for (EntropyKind k : table.kinds) {
        const EntropyValue& base = table.baseline.values.at(k);
        out += fmt::format(" {:>11} {:>11}", fixed4(base.value), base.value ? "0" : "undefined");
      }
      out += "\n";
      for (const LossRow& r : table.rows) {
        out += fmt::format("{:<12} {:>11} {:>6}", r.label, fixed4(r.bet), r.degree);
        for (EntropyKind k : table.kinds) {
          const LossCell& c = r.cells.at(k);
          out += fmt::format(" {:>11} {:>11}", fixed4(c.h_after), fixed4(c.i_loss));
        }
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

json verify_json(const VerifyResult& result) {
  json j;
  j["dataset"] = result.dataset;
  j["counts"] = {{"expected_nodes", result.counts.expected_nodes},
                 {"expected_edges", result.counts.expected_edges},
                 {"nodes", result.counts.nodes},
                 {"edges", result.counts.edges},
                 {"edge_convention", result.counts.edge_convention},
                 {"ok", result.counts.ok()}};
  json checks = json::array();
  for (const EntropyCheck& c : result.entropies) {
    checks.push_back({{"measure", column_name(c.kind)},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance},
                      {"actual", optional_number(c.actual)},
                      {"within_tolerance", c.within()}});
  }
  j["entropies"] = checks;
  j["informational"] = result.informational();
  j["passed"] = result.passed();
  j["conventions"] = conventions_json();
  return j;
}

std::string render_verify(const VerifyResult& result, OutputFormat format) {
  if (format == OutputFormat::json) return verify_json(result).dump(2) + "\n";
  const CountCheck& c = result.counts;
  std::string out = fmt::format("dataset: {}\n", result.dataset);
  out += fmt::format("  nodes  expected {:>8}  got {:>8}  {}\n", c.expected_nodes, c.nodes,
                     c.nodes == c.expected_nodes ? "ok" : "MISMATCH");
  std::string edge_status = c.edge_convention.empty() ? "MISMATCH" : "ok (" + c.edge_convention + ")";
  out += fmt::format("  edges  expected {:>8}  got {:>8}  {}\n", c.expected_edges, c.edges, edge_status);
  if (result.informational()) out += "  counts differ: entropy comparison below is informational only\n";
  for (const EntropyCheck& e : result.entropies) {
    std::string status = result.informational() ? "info" : (e.within() ? "ok" : "MISMATCH");
    std::string diff = e.actual ? fmt::format("{:+.4f}", *e.actual - e.expected) : "n/a";
    out += fmt::format("  H_{:<10} expected {:.4f}  got {:>9}  diff {:>8}  tol {:.4f}  {}\n", column_name(e.kind),
                       e.expected, fixed4(e.actual), diff, e.tolerance, status);
  }
  out += result.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

std::string render_datasets(OutputFormat format) {
  const auto& reg = dataset_registry();
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const DatasetEntry& e : reg) {
      json exp = json::object();
      for (const auto& [k, v] : e.expected_entropy) exp[column_name(k)] = v;
      arr.push_back({{"name", e.name},
                     {"description", e.description},
                     {"nodes", e.expected_nodes},
                     {"edges", e.expected_edges},
                     {"embedded", e.embedded.has_value()},
                     {"expected_entropies", exp}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  if (format == OutputFormat::csv) {
    out = "name,nodes,edges,embedded,description\n";
    for (const DatasetEntry& e : reg) {
      out += fmt::format("{},{},{},{},{}\n", e.name, e.expected_nodes, e.expected_edges, e.embedded ? "yes" : "no",
                         csv_field(e.description));
    }
    return out;
  }
  out = fmt::format("{:<16} {:>6} {:>7} {:<9} {}\n", "name", "nodes", "edges", "source", "description");
  for (const DatasetEntry& e : reg) {
    out += fmt::format("{:<16} {:>6} {:>7} {:<9} {}\n", e.name, e.expected_nodes, e.expected_edges,
                       e.embedded ? "embedded" : "--input", e.description);
  }
  return out;
}

}  // namespace betent
