#include <doctest.h>

#include <nlohmann/json.hpp>

#include "betent/report.hpp"
#include "support/graphs.hpp"

using namespace betent;
using namespace betent::testing;
using nlohmann::json;

TEST_CASE("JSON report carries the required keys and conventions") {
  Graph g = karate();
  EntropyReport r = compute_entropies(g, kAllEntropyKinds);
  json j = json::parse(render_entropies(summarize(g, "karate"), r, OutputFormat::json));
  for (const char* key : {"graph", "conventions", "entropies", "tool"}) CHECK(j.contains(key));
  CHECK_FALSE(j.contains("loss_rows"));
  CHECK(j["graph"]["nodes"] == 34);
  CHECK(j["graph"]["edges"] == 78);
  CHECK(j["conventions"]["log_base"] == "e");
  CHECK(j["conventions"]["units"] == "nats");
  CHECK(j["conventions"]["pair_convention"] == "ordered");
  CHECK(j["conventions"]["tie_tolerance"].get<double>() == kTieTolerance);
}

TEST_CASE("JSON numbers round-trip at full precision") {
  Graph g = karate();
  LossTable t = information_loss(g, kAllEntropyKinds, {.threads = 0});
  json j = json::parse(render_loss(summarize(g, "karate"), t, OutputFormat::json));
  for (EntropyKind k : kAllEntropyKinds) {
    CHECK(j["entropies"][std::string(to_string(k))]["value"].get<double>() == *t.baseline.find(k)->value);
    const auto& probs = t.baseline.find(k)->probabilities;
    CHECK(j["entropies"][std::string(to_string(k))]["probabilities"].get<std::vector<double>>() == probs);
  }
  REQUIRE(j["loss_rows"].size() == 34);
  for (std::size_t i = 0; i < 34; ++i) {
    const json& row = j["loss_rows"][i];
    CHECK(row["vertex"] == t.rows[i].label);
    CHECK(row["betweenness"].get<double>() == *t.rows[i].bet);
    for (EntropyKind k : kAllEntropyKinds) {
      const auto& cell = row[std::string(to_string(k))];
      CHECK(cell["h_after"].get<double>() == *t.rows[i].cells.at(k).h_after);
      CHECK(cell["i_loss"].get<double>() == *t.rows[i].cells.at(k).i_loss);
    }
  }
}

TEST_CASE("undefined values are null with a reason") {
  Graph g = complete_graph(4);
  EntropyReport r = compute_entropies(g, kAllEntropyKinds);
  json j = report_json(summarize(g, "k4"), r);
  CHECK(j["entropies"]["bet"]["value"].is_null());
  CHECK(j["entropies"]["bet"]["undefined_reason"].get<std::string>().find("degenerate") != std::string::npos);
}

TEST_CASE("table output uses four decimals") {
  Graph g = karate();
  const EntropyKind deg[] = {EntropyKind::degree};
  std::string text = render_entropies(summarize(g, "karate"), compute_entropies(g, deg), OutputFormat::table);
  CHECK(text.find("H_deg        3.2609") != std::string::npos);
}

TEST_CASE("loss CSV has one row per vertex plus a header") {
  Graph g = petersen();
  LossTable t = information_loss(g, kAllEntropyKinds);
  std::string csv = render_loss(summarize(g, "petersen"), t, OutputFormat::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  CHECK(csv.rfind("vertex,betweenness,degree,H_deg,I_loss_deg,H_bet,I_loss_bet,H_partition,I_loss_partition\n", 0) == 0);
}

TEST_CASE("verification") {
  Graph g = karate();
  const DatasetEntry& entry = *find_dataset("karate");
  VerifyResult v = verify_dataset(entry, g);
  CHECK(v.counts.ok());
  CHECK(v.counts.edge_convention == "undirected");
  CHECK_FALSE(v.informational());

  Graph truncated = remove_vertex(g, "34");
  VerifyResult bad = verify_dataset(entry, truncated);
  CHECK_FALSE(bad.counts.ok());
  CHECK(bad.informational());
  CHECK_FALSE(bad.passed());
}

TEST_CASE("arc-count convention") {
  // a registry row listing 2m edges matches a graph with m undirected edges
  DatasetEntry e;
  e.name = "synthetic";
  e.expected_nodes = 10;
  e.expected_edges = 30;
  e.expected_entropy = {{EntropyKind::degree, std::log(10.0)}};
  e.tolerance = {{EntropyKind::degree, 0.05}};
  VerifyResult v = verify_dataset(e, petersen());
  CHECK(v.counts.edge_convention == "arcs");
  CHECK(v.passed());

  e.expected_entropy[EntropyKind::degree] = 2.2;
  CHECK_FALSE(verify_dataset(e, petersen()).passed());
}

TEST_CASE("registry") {
  CHECK(find_dataset("karate")->embedded.has_value());
  CHECK(find_dataset("petersen")->embedded.has_value());
  const DatasetEntry* grid = find_dataset("us-powergrid");
  REQUIRE(grid);
  CHECK(grid->expected_nodes == 4941);
  CHECK(grid->expected_edges == 13188);
  CHECK(grid->expected_entropy.at(EntropyKind::degree) == 8.3208);
  CHECK(grid->expected_entropy.at(EntropyKind::betweenness) == 5.7191);
  CHECK_FALSE(grid->embedded.has_value());
  for (const DatasetEntry& e : dataset_registry()) {
    if (!e.embedded) continue;
    Graph g = load_embedded(e);
    CHECK(g.num_vertices() == e.expected_nodes);
    CHECK(g.num_edges() == e.expected_edges);
  }
  CHECK(find_dataset("nope") == nullptr);
}
