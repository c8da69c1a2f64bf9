#include <doctest.h>

#include <random>

#include "betent/error.hpp"
#include "betent/robustness.hpp"
#include "support/graphs.hpp"

using namespace betent;
using namespace betent::testing;

namespace {

const LossRow& row_of(const LossTable& t, const Graph& g, const std::string& label) {
  return t.rows.at(g.index_of(label));
}

}  // namespace

TEST_CASE("karate degree losses") {
  Graph g = karate();
  const EntropyKind kinds[] = {EntropyKind::degree};
  LossTable t = information_loss(g, kinds);
  REQUIRE(t.rows.size() == 34);
  const LossCell& one = row_of(t, g, "1").cells.at(EntropyKind::degree);
  CHECK(*one.h_after == doctest::Approx(3.1970).epsilon(1e-4));
  CHECK(*one.i_loss == doctest::Approx(0.0639).epsilon(1e-3));
  CHECK(*row_of(t, g, "12").cells.at(EntropyKind::degree).h_after == doctest::Approx(3.2490).epsilon(1e-4));
  CHECK(row_of(t, g, "1").degree == 16);
  CHECK(row_of(t, g, "34").degree == 17);
}

TEST_CASE("karate betweenness losses") {
  // values from an independent networkx enumeration
  Graph g = karate();
  const EntropyKind kinds[] = {EntropyKind::betweenness};
  LossTable t = information_loss(g, kinds, {.threads = 0});
  const LossCell& c34 = row_of(t, g, "34").cells.at(EntropyKind::betweenness);
  CHECK(*c34.h_after == doctest::Approx(2.113811299995885).epsilon(1e-12));
  CHECK(*c34.i_loss == doctest::Approx(0.21304804347049533).epsilon(1e-12));
  const LossCell& c1 = row_of(t, g, "1").cells.at(EntropyKind::betweenness);
  CHECK(*c1.h_after == doctest::Approx(2.3305295450294325).epsilon(1e-12));
  CHECK(*row_of(t, g, "1").bet == doctest::Approx(1686.0 / 3112.0));
}

TEST_CASE("3-regular graph: every removal gives the same partition and degree rows") {
  Graph p = petersen();
  LossTable t = information_loss(p, kAllEntropyKinds);
  CHECK(*t.baseline.find(EntropyKind::partition)->value == 0.0);
  const LossRow& first = t.rows.front();
  for (const LossRow& r : t.rows) {
    const LossCell& part = r.cells.at(EntropyKind::partition);
    CHECK(*part.h_after == doctest::Approx(0.6365).epsilon(1e-4));
    CHECK(*part.i_loss == doctest::Approx(-0.6365).epsilon(1e-4));
    CHECK(*r.cells.at(EntropyKind::degree).h_after == *first.cells.at(EntropyKind::degree).h_after);
    CHECK(*r.cells.at(EntropyKind::degree).i_loss == *first.cells.at(EntropyKind::degree).i_loss);
  }
}

TEST_CASE("rows are recomputed from scratch") {
  std::mt19937_64 rng(19);
  Graph g = random_connected_graph(rng, 25, 0.1, WeightMode::small_integers);
  LossTable t = information_loss(g, kAllEntropyKinds, {.threads = 4});
  for (const LossRow& r : t.rows) {
    Graph reduced = remove_vertex(g, r.vertex);
    CHECK(*r.cells.at(EntropyKind::degree).h_after == degree_entropy(reduced));
    const auto& bet = r.cells.at(EntropyKind::betweenness);
    if (bet.h_after) CHECK(*bet.h_after == betweenness_entropy(reduced));
  }
}

TEST_CASE("loss bookkeeping") {
  Graph g = karate();
  LossTable t = information_loss(g, kAllEntropyKinds);
  for (EntropyKind k : kAllEntropyKinds) {
    const double base = *t.baseline.find(k)->value;
    double sum_after = 0.0;
    double sum_recovered = 0.0;
    for (const LossRow& r : t.rows) {
      const LossCell& c = r.cells.at(k);
      CHECK(std::abs(*c.i_loss - (base - *c.h_after)) <= 1e-12);
      sum_after += *c.h_after;
      sum_recovered += base - *c.i_loss;
    }
    CHECK(sum_recovered == sum_after);
  }
}

TEST_CASE("thread count does not change the table") {
  Graph g = karate();
  LossTable a = information_loss(g, kAllEntropyKinds, {.threads = 1});
  LossTable b = information_loss(g, kAllEntropyKinds, {.threads = 8});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (EntropyKind k : kAllEntropyKinds) {
      CHECK(a.rows[i].cells.at(k).h_after == b.rows[i].cells.at(k).h_after);
      CHECK(a.rows[i].cells.at(k).i_loss == b.rows[i].cells.at(k).i_loss);
    }
  }
}

TEST_CASE("degenerate remainders are marked, never zero") {
  // removing the hub of a star leaves no edges at all
  Graph g = star_graph(3);
  const Vertex hub[] = {0};
  LossTable t = information_loss(g, kAllEntropyKinds, hub);
  const LossRow& r = t.rows.front();
  CHECK_FALSE(r.cells.at(EntropyKind::degree).h_after.has_value());
  CHECK_FALSE(r.cells.at(EntropyKind::degree).i_loss.has_value());
  CHECK_FALSE(r.cells.at(EntropyKind::betweenness).h_after.has_value());
  CHECK_FALSE(r.cells.at(EntropyKind::degree).undefined_reason.empty());
  // partition entropy of three isolated vertices is still defined
  CHECK(*r.cells.at(EntropyKind::partition).h_after == 0.0);

  // triangle: baseline betweenness is already undefined
  LossTable tri = information_loss(complete_graph(3), kAllEntropyKinds);
  CHECK_FALSE(tri.baseline.find(EntropyKind::betweenness)->value.has_value());
  CHECK_FALSE(tri.rows[0].cells.at(EntropyKind::betweenness).i_loss.has_value());
  CHECK(*tri.rows[0].bet == 0.0);
}

TEST_CASE("too small or unknown") {
  CHECK_THROWS_AS(information_loss(edgelist("a b"), kAllEntropyKinds), Error);
  const Vertex bogus[] = {99};
  try {
    information_loss(karate(), kAllEntropyKinds, bogus);
    FAIL("expected unknown vertex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_vertex);
  }
}

TEST_CASE("rank by loss") {
  Graph g = karate();
  LossTable t = information_loss(g, kAllEntropyKinds, {.threads = 0});

  auto labels = [&](const std::vector<Vertex>& order, std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(g.label(order[i]));
    return out;
  };
  auto by_deg = rank_by_loss(t, EntropyKind::degree);
  CHECK(labels(by_deg, 2) == std::vector<std::string>{"34", "33"});
  // independent networkx enumeration: largest signed betweenness losses
  CHECK(labels(rank_by_loss(t, EntropyKind::betweenness), 4) == std::vector<std::string>{"34", "2", "3", "33"});

  auto abs_order = rank_by_loss(t, EntropyKind::betweenness, RankOrder::absolute_loss);
  for (std::size_t i = 1; i < abs_order.size(); ++i) {
    CHECK(std::abs(*t.rows[abs_order[i - 1]].cells.at(EntropyKind::betweenness).i_loss) >=
          std::abs(*t.rows[abs_order[i]].cells.at(EntropyKind::betweenness).i_loss));
  }

  LossTable deg_only = information_loss(g, std::vector<EntropyKind>{EntropyKind::degree});
  CHECK_THROWS_AS(rank_by_loss(deg_only, EntropyKind::betweenness), Error);
}

TEST_CASE("full ties fall back to label order") {
  GraphBuilder b;
  for (const char* l : {"10", "2", "1", "b", "a", "3", "20", "11", "4", "5"}) b.add_vertex(l);
  Graph p = petersen();
  for (const Edge& e : p.edges()) b.add_edge(e.u, e.v);
  Graph g = std::move(b).build();
  LossTable t = information_loss(g, std::vector<EntropyKind>{EntropyKind::partition});
  std::vector<std::string> order;
  for (Vertex v : rank_by_loss(t, EntropyKind::partition)) order.push_back(g.label(v));
  CHECK(order == std::vector<std::string>{"1", "2", "3", "4", "5", "10", "11", "20", "a", "b"});
}

TEST_CASE("undefined cells sort last") {
  Graph g = star_graph(4);
  LossTable t = information_loss(g, std::vector<EntropyKind>{EntropyKind::degree});
  auto order = rank_by_loss(t, EntropyKind::degree);
  CHECK(order.back() == 0);  // removing the hub leaves no edges
}
