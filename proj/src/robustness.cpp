#include "betent/robustness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "betent/error.hpp"
#include "betent/parallel.hpp"

namespace betent {

LossTable information_loss(const Graph& g, std::span<const EntropyKind> kinds, const LossOptions& options) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return information_loss(g, kinds, all, options);
}

LossTable information_loss(const Graph& g, std::span<const EntropyKind> kinds, std::span<const Vertex> vertices,
                           const LossOptions& options) {
  if (g.num_vertices() < 3) throw Error(ErrorKind::invalid_argument, "information loss needs at least 3 vertices");
  for (Vertex v : vertices) {
    if (v >= g.num_vertices()) throw Error(ErrorKind::unknown_vertex, "unknown vertex index " + std::to_string(v));
  }

  const unsigned threads = resolve_threads(options.threads);
  // one removal is small work; spread sources only when there are few rows
  const bool parallel_rows = vertices.size() >= threads;
  const CentralityOptions inner{.threads = parallel_rows ? 1u : threads};

  LossTable table;
  table.kinds.assign(kinds.begin(), kinds.end());
  table.baseline = compute_entropies(g, kinds, inner);

  std::optional<BetweennessVector> bet;
  try {
    bet = betweenness(g, inner);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::degenerate) throw;
  }

  table.rows.resize(vertices.size());
  parallel_for(vertices.size(), parallel_rows ? threads : 1u, [&](unsigned, std::size_t i) {
    const Vertex v = vertices[i];
    LossRow& row = table.rows[i];
    row.vertex = v;
    row.label = g.label(v);
    row.degree = g.degree(v);
    if (bet) row.bet = bet->bet[v];

    const Graph reduced = remove_vertex(g, v);
    const EntropyReport after = compute_entropies(reduced, kinds, inner);
    for (EntropyKind kind : kinds) {
      LossCell& cell = row.cells[kind];
      const EntropyValue& before = table.baseline.values.at(kind);
      const EntropyValue& now = after.values.at(kind);
      cell.h_after = now.value;
      if (!now.value) {
        cell.undefined_reason = now.undefined_reason;
      } else if (!before.value) {
        cell.undefined_reason = "baseline undefined: " + before.undefined_reason;
      } else {
        cell.i_loss = *before.value - *now.value;
      }
    }
  });
  return table;
}

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
  if (ia || ib) return ia.has_value();  // numbers before words
  return a < b;
}

std::vector<Vertex> rank_by_loss(const LossTable& table, EntropyKind kind, RankOrder order) {
  if (std::find(table.kinds.begin(), table.kinds.end(), kind) == table.kinds.end()) {
    throw Error(ErrorKind::invalid_argument, "loss table has no '" + std::string(to_string(kind)) + "' column");
  }
  auto key = [&](const LossRow& row) -> std::optional<double> {
    const auto& loss = row.cells.at(kind).i_loss;
    if (!loss) return std::nullopt;
    return order == RankOrder::absolute_loss ? std::abs(*loss) : *loss;
  };
  std::vector<const LossRow*> rows;
  for (const LossRow& r : table.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [&](const LossRow* a, const LossRow* b) {
    auto ka = key(*a);
    auto kb = key(*b);
    if (ka.has_value() != kb.has_value()) return ka.has_value();
    if (ka && *ka != *kb) return *ka > *kb;
    return label_less(a->label, b->label);
  });
  std::vector<Vertex> out;
  out.reserve(rows.size());
  for (const LossRow* r : rows) out.push_back(r->vertex);
  return out;
}

}  // namespace betent
