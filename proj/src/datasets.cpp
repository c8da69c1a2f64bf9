#include "betent/datasets.hpp"

#include <algorithm>
#include <cmath>

#include "betent/error.hpp"

namespace betent {
namespace {

constexpr std::string_view kKarate =
    "# Zachary karate club\n"
    "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n11\n12\n13\n14\n15\n16\n17\n"
    "18\n19\n20\n21\n22\n23\n24\n25\n26\n27\n28\n29\n30\n31\n32\n33\n34\n"
    "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n"
    "1 11\n1 12\n1 13\n1 14\n1 18\n1 20\n1 22\n1 32\n"
    "2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n"
    "3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33\n"
    "4 8\n4 13\n4 14\n5 7\n5 11\n6 7\n6 11\n6 17\n"
    "7 17\n9 31\n9 33\n9 34\n10 34\n14 34\n15 33\n15 34\n"
    "16 33\n16 34\n19 33\n19 34\n20 34\n21 33\n21 34\n23 33\n"
    "23 34\n24 26\n24 28\n24 30\n24 33\n24 34\n25 26\n25 28\n"
    "25 32\n26 32\n27 30\n27 34\n28 34\n29 32\n29 34\n30 33\n"
    "30 34\n31 33\n31 34\n32 33\n32 34\n33 34\n";

constexpr std::string_view kPetersen =
    "# Petersen graph: outer 5-cycle, spokes, inner pentagram\n"
    "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n"
    "1 2\n2 3\n3 4\n4 5\n5 1\n"
    "1 6\n2 7\n3 8\n4 9\n5 10\n"
    "6 8\n8 10\n10 7\n7 9\n9 6\n";

constexpr double kTable4Tolerance = 0.05;

DatasetEntry table4_row(std::string name, std::string description, std::size_t nodes, std::size_t edges, double h_deg,
                        double h_bet, double h_partition) {
  DatasetEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.expected_nodes = nodes;
  e.expected_edges = edges;
  e.expected_entropy = {{EntropyKind::degree, h_deg}, {EntropyKind::betweenness, h_bet},
                        {EntropyKind::partition, h_partition}};
  e.tolerance = {{EntropyKind::degree, kTable4Tolerance}, {EntropyKind::betweenness, kTable4Tolerance},
                 {EntropyKind::partition, kTable4Tolerance}};
  return e;
}

std::vector<DatasetEntry> make_registry() {
  std::vector<DatasetEntry> r;

  DatasetEntry karate;
  karate.name = "karate";
  karate.description = "Zachary karate club (embedded)";
  karate.expected_nodes = 34;
  karate.expected_edges = 78;
  karate.embedded = kKarate;
  karate.expected_entropy = {{EntropyKind::degree, 3.2609}, {EntropyKind::betweenness, 2.8857}};
  karate.tolerance = {{EntropyKind::degree, 0.001}, {EntropyKind::betweenness, 0.003}};
  r.push_back(std::move(karate));

  DatasetEntry petersen;
  petersen.name = "petersen";
  petersen.description = "Petersen graph, 3-regular on 10 vertices (embedded)";
  petersen.expected_nodes = 10;
  petersen.expected_edges = 15;
  petersen.embedded = kPetersen;
  petersen.expected_entropy = {{EntropyKind::degree, 2.3026}, {EntropyKind::partition, 0.0}};
  petersen.tolerance = {{EntropyKind::degree, 0.0001}, {EntropyKind::partition, 0.0}};
  r.push_back(std::move(petersen));

  r.push_back(table4_row("us-airport", "US airport network, 500 busiest airports", 500, 5962, 5.025, 4.7338, 3.1263));
  r.push_back(table4_row("email", "email network", 1133, 10902, 6.631, 5.5021, 3.1780));
  r.push_back(table4_row("yeast", "budding yeast protein-protein interactions", 2375, 23386, 7.0539, 6.0931, 3.0345));
  r.push_back(table4_row("us-powergrid", "US western power grid", 4941, 13188, 8.3208, 5.7191, 1.7018));
  r.push_back(table4_row("germany-highway", "Germany highway network", 1168, 2486, 6.9947, 5.6383, 0.6909));
  return r;
}

}  // namespace

std::string_view karate_edgelist() { return kKarate; }
std::string_view petersen_edgelist() { return kPetersen; }

const std::vector<DatasetEntry>& dataset_registry() {
  static const std::vector<DatasetEntry> registry = make_registry();
  return registry;
}

const DatasetEntry* find_dataset(std::string_view name) {
  const auto& r = dataset_registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const DatasetEntry& e) { return e.name == name; });
  return it == r.end() ? nullptr : &*it;
}

Graph load_embedded(const DatasetEntry& entry) {
  if (!entry.embedded) throw Error(ErrorKind::invalid_argument, "dataset '" + entry.name + "' is not embedded");
  return parse_graph(*entry.embedded, entry.format);
}

bool VerifyResult::passed() const {
  if (!counts.ok()) return false;
  return std::all_of(entropies.begin(), entropies.end(), [](const EntropyCheck& c) { return c.within(); });
}

VerifyResult verify_dataset(const DatasetEntry& entry, const Graph& g, const CentralityOptions& options) {
  VerifyResult result;
  result.dataset = entry.name;
  result.counts.expected_nodes = entry.expected_nodes;
  result.counts.expected_edges = entry.expected_edges;
  result.counts.nodes = g.num_vertices();
  result.counts.edges = g.num_edges();
  if (g.num_edges() == entry.expected_edges) {
    result.counts.edge_convention = "undirected";
  } else if (2 * g.num_edges() == entry.expected_edges) {
    result.counts.edge_convention = "arcs";
  }

  std::vector<EntropyKind> kinds;
  for (const auto& [kind, value] : entry.expected_entropy) kinds.push_back(kind);
  const EntropyReport report = compute_entropies(g, kinds, options);
  for (const auto& [kind, value] : entry.expected_entropy) {
    EntropyCheck c;
    c.kind = kind;
    c.expected = value;
    c.tolerance = entry.tolerance.at(kind);
    const EntropyValue& v = report.values.at(kind);
    c.actual = v.value;
    c.undefined_reason = v.undefined_reason;
    result.entropies.push_back(c);
  }
  return result;
}

}  // namespace betent
