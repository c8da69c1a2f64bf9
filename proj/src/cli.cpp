#include "betent/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "betent/datasets.hpp"
#include "betent/error.hpp"
#include "betent/io.hpp"
#include "betent/report.hpp"

namespace betent {
namespace {

struct InputOptions {
  std::string input;
  std::string format;  // empty = infer from extension
  bool force_weighted = false;
  bool force_unweighted = false;
  unsigned threads = 1;
  std::string output = "table";
};

struct LoadedGraph {
  Graph graph;
  std::string source;
};

void add_input_flags(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"edgelist", "pajek", "gml"}));
  cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--threads", o.threads, "Worker threads (0 = one per core)");
  auto* w = cmd->add_flag("--weighted", o.force_weighted, "Use edge weights as lengths even if all are 1");
  auto* u = cmd->add_flag("--unweighted", o.force_unweighted, "Ignore edge weights");
  w->excludes(u);
}

LoadedGraph load_input(const std::string& input, const std::string& format_name, std::ostream& err) {
  std::vector<std::string> warnings;
  LoadedGraph loaded;
  if (std::filesystem::is_regular_file(input)) {
    GraphFormat format = format_name.empty() ? format_from_path(input) : *parse_format(format_name);
    loaded.graph = parse_graph(read_file(input), format, &warnings);
    loaded.source = input;
  } else if (const DatasetEntry* entry = find_dataset(input); entry && entry->embedded) {
    loaded.graph = load_embedded(*entry);
    loaded.source = entry->name;
  } else {
    throw Error(ErrorKind::parse, fmt::format("'{}' is neither a readable file nor an embedded dataset", input));
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return loaded;
}

Graph apply_weight_mode(Graph g, const InputOptions& o) {
  if (o.force_unweighted) return g.with_unit_weights();
  if (o.force_weighted) return g.with_weighted_flag(true);
  return g;
}

std::vector<EntropyKind> parse_kinds(const std::vector<std::string>& names) {
  std::set<EntropyKind> kinds;
  for (const auto& n : names) {
    if (n == "all") {
      kinds.insert(kAllEntropyKinds.begin(), kAllEntropyKinds.end());
    } else if (auto k = parse_entropy_kind(n)) {
      kinds.insert(*k);
    } else {
      throw Error(ErrorKind::invalid_argument, fmt::format("unknown measure '{}'", n));
    }
  }
  return {kinds.begin(), kinds.end()};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return kExitParse;
    case ErrorKind::degenerate: return kExitDegenerate;
    case ErrorKind::unknown_vertex: return kExitUnknownVertex;
    case ErrorKind::verification: return kExitVerifyMismatch;
    case ErrorKind::invalid_argument: return kExitParse;
    case ErrorKind::overflow:
    case ErrorKind::size_limit: return kExitInternal;
  }
  return kExitInternal;
}

int cmd_compute(const InputOptions& o, const std::vector<std::string>& measures, std::ostream& out, std::ostream& err) {
  LoadedGraph in = load_input(o.input, o.format, err);
  const Graph g = apply_weight_mode(std::move(in.graph), o);
  const auto kinds = parse_kinds(measures);
  const EntropyReport report = compute_entropies(g, kinds, {.threads = o.threads});
  for (const auto& [kind, v] : report.values) {
    if (!v.value) {
      err << "error: " << v.undefined_reason << "\n";
      return kExitDegenerate;
    }
  }
  out << render_entropies(summarize(g, in.source), report, *parse_output_format(o.output));
  return kExitOk;
}

int cmd_loss(const InputOptions& o, const std::vector<std::string>& measures, const std::vector<std::string>& vertices,
             const std::string& sort, std::ostream& out, std::ostream& err) {
  LoadedGraph in = load_input(o.input, o.format, err);
  const Graph g = apply_weight_mode(std::move(in.graph), o);
  const auto kinds = parse_kinds(measures);
  const LossOptions opts{.threads = o.threads};

  LossTable table;
  if (vertices.empty()) {
    table = information_loss(g, kinds, opts);
  } else {
    std::vector<Vertex> ids;
    for (const auto& label : vertices) ids.push_back(g.index_of(label));
    table = information_loss(g, kinds, ids, opts);
  }

  if (sort != "label") {
    const RankOrder order = sort == "abs-loss" ? RankOrder::absolute_loss : RankOrder::signed_loss;
    const auto ranked = rank_by_loss(table, kinds.front(), order);
    std::vector<LossRow> rows;
    for (Vertex v : ranked) {
      auto it = std::find_if(table.rows.begin(), table.rows.end(), [v](const LossRow& r) { return r.vertex == v; });
      rows.push_back(*it);
    }
    table.rows = std::move(rows);
  }
  out << render_loss(summarize(g, in.source), table, *parse_output_format(o.output));
  return kExitOk;
}

int cmd_verify(const std::string& name, const InputOptions& o, std::ostream& out, std::ostream& err) {
  const DatasetEntry* entry = find_dataset(name);
  if (!entry) {
    err << fmt::format("error: no registered dataset '{}' (see `datasets`)\n", name);
    return kExitParse;
  }
  LoadedGraph in;
  if (!o.input.empty()) {
    in = load_input(o.input, o.format, err);
  } else if (entry->embedded) {
    in = {load_embedded(*entry), entry->name};
  } else {
    err << fmt::format("error: dataset '{}' is not embedded; pass its file with --input\n", name);
    return kExitParse;
  }
  const Graph g = apply_weight_mode(std::move(in.graph), o);
  const VerifyResult result = verify_dataset(*entry, g, {.threads = o.threads});
  out << render_verify(result, o.output == "json" ? OutputFormat::json : OutputFormat::table);
  return result.passed() ? kExitOk : kExitVerifyMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betweenness, degree and partition structure entropies of networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  InputOptions compute_opts;
  std::vector<std::string> compute_measures{"all"};
  auto* compute = app.add_subcommand("compute", "Structure entropies of a graph");
  compute->add_option("input", compute_opts.input, "Graph file or embedded dataset name")->required();
  compute->add_option("--measures", compute_measures, "deg, bet, partition or all")->delimiter(',');
  add_input_flags(compute, compute_opts);

  InputOptions loss_opts;
  std::vector<std::string> loss_measures{"all"};
  std::vector<std::string> loss_vertices;
  bool loss_all = false;
  std::string loss_sort = "label";
  auto* loss = app.add_subcommand("loss", "Per-vertex information loss under single-vertex removal");
  loss->add_option("input", loss_opts.input, "Graph file or embedded dataset name")->required();
  loss->add_option("--measure,--measures", loss_measures, "deg, bet, partition or all")->delimiter(',');
  auto* vertex_opt = loss->add_option("--vertex", loss_vertices, "Vertex label (repeatable)");
  loss->add_flag("--all", loss_all, "Every vertex (default)")->excludes(vertex_opt);
  loss->add_option("--sort", loss_sort, "Row order: label, loss or abs-loss (by the first measure)")
      ->check(CLI::IsMember({"label", "loss", "abs-loss"}));
  add_input_flags(loss, loss_opts);

  InputOptions verify_opts;
  std::string verify_name;
  auto* verify = app.add_subcommand("verify", "Check a dataset against its registered counts and entropies");
  verify->add_option("dataset", verify_name, "Registered dataset name")->required();
  verify->add_option("--input", verify_opts.input, "Dataset file (defaults to the embedded copy)");
  add_input_flags(verify, verify_opts);

  std::string datasets_output = "table";
  auto* datasets = app.add_subcommand("datasets", "List registered datasets");
  datasets->add_option("--output", datasets_output)->check(CLI::IsMember({"table", "csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_opts, compute_measures, out, err);
    if (loss->parsed()) return cmd_loss(loss_opts, loss_measures, loss_vertices, loss_sort, out, err);
    if (verify->parsed()) return cmd_verify(verify_name, verify_opts, out, err);
    if (datasets->parsed()) {
      out << render_datasets(*parse_output_format(datasets_output));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace betent
