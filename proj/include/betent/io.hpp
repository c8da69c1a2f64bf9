#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betent/graph.hpp"

namespace betent {

enum class GraphFormat { edgelist, pajek, gml };

std::string_view to_string(GraphFormat f);
std::optional<GraphFormat> parse_format(std::string_view name);
/// ".net" -> pajek, ".gml" -> gml, anything else -> edgelist.
GraphFormat format_from_path(std::string_view path);

/// Parses a graph from text.
///
/// Absent weights default to 1. Non-fatal oddities (self-loops, symmetrized
/// arcs) are appended to `warnings` when it is non-null. Throws ParseError
/// with a line number on malformed input or nonpositive weights, and
/// Error(parse) on an empty graph.
Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings = nullptr);

/// Writes g so that parse_graph(serialize_graph(g, f), f) == g.
/// Labels must not contain whitespace or '"'.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Reads a whole file; throws Error(parse) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace betent
