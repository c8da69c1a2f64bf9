#include "betent/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "betent/error.hpp"

namespace betent {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, fmt::format("invalid weight '{}'", tok));
  }
  if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line, fmt::format("nonpositive weight {}", tok));
  return w;
}

long long parse_int(std::string_view tok, std::size_t line, std::string_view what) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, fmt::format("invalid {} '{}'", what, tok));
  }
  return x;
}

/// Calls fn(line_number, line) for every line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++lineno;
    fn(lineno, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

Graph finish(GraphBuilder&& b, std::vector<std::string>* warnings) {
  if (warnings) warnings->insert(warnings->end(), b.warnings().begin(), b.warnings().end());
  return std::move(b).build();
}

// ---------------------------------------------------------------- edge list

Graph parse_edgelist(std::string_view text, std::vector<std::string>* warnings) {
  GraphBuilder b;
  for_each_line(text, [&](std::size_t lineno, std::string_view raw) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == '%') return;
    auto tok = split_ws(line);
    if (tok.size() == 1) {
      b.add_vertex(tok[0]);  // isolated vertex
    } else if (tok.size() == 2 || tok.size() == 3) {
      double w = tok.size() == 3 ? parse_weight(tok[2], lineno) : 1.0;
      b.add_edge(tok[0], tok[1], w);
    } else {
      throw ParseError(lineno, fmt::format("expected 'u v [w]', got {} fields", tok.size()));
    }
  });
  return finish(std::move(b), warnings);
}

// ---------------------------------------------------------------- pajek

std::string_view take_pajek_name(std::string_view rest, std::size_t lineno) {
  rest = trim(rest);
  if (rest.empty()) return {};
  if (rest.front() == '"') {
    auto close = rest.find('"', 1);
    if (close == std::string_view::npos) throw ParseError(lineno, "unterminated quoted vertex name");
    return rest.substr(1, close - 1);
  }
  return split_ws(rest).front();
}

Graph parse_pajek(std::string_view text, std::vector<std::string>* warnings) {
  enum class Section { none, vertices, edges, arcs, skip } section = Section::none;
  GraphBuilder b;
  long long declared = -1;
  std::map<long long, std::string> names;  // pajek id -> label
  bool vertices_done = false;
  bool warned_arcs = false;

  auto flush_vertices = [&] {
    if (vertices_done || declared < 0) return;
    for (long long id = 1; id <= declared; ++id) {
      auto it = names.find(id);
      b.add_vertex(it != names.end() ? it->second : std::to_string(id));
    }
    vertices_done = true;
  };
  auto vertex_of = [&](std::string_view tok, std::size_t lineno) -> Vertex {
    long long id = parse_int(tok, lineno, "vertex id");
    if (id < 1 || id > declared) throw ParseError(lineno, fmt::format("vertex id {} out of range 1..{}", id, declared));
    return static_cast<Vertex>(id - 1);
  };

  for_each_line(text, [&](std::size_t lineno, std::string_view raw) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') return;
    if (line.front() == '*') {
      auto tok = split_ws(line);
      std::string key = lower(tok[0]);
      if (key == "*vertices") {
        if (tok.size() < 2) throw ParseError(lineno, "*Vertices needs a count");
        declared = parse_int(tok[1], lineno, "vertex count");
        if (declared < 0) throw ParseError(lineno, "negative vertex count");
        section = Section::vertices;
      } else if (key == "*edges" || key == "*arcs") {
        if (declared < 0) throw ParseError(lineno, fmt::format("{} before *Vertices", tok[0]));
        flush_vertices();
        section = key == "*edges" ? Section::edges : Section::arcs;
      } else if (key == "*network") {
        section = Section::none;
      } else {
        throw ParseError(lineno, fmt::format("unsupported pajek section {}", tok[0]));
      }
      return;
    }
    switch (section) {
      case Section::vertices: {
        auto tok = split_ws(line);
        long long id = parse_int(tok[0], lineno, "vertex id");
        if (id < 1 || id > declared) throw ParseError(lineno, fmt::format("vertex id {} out of range", id));
        std::string_view name = take_pajek_name(line.substr(tok[0].size()), lineno);
        if (!name.empty()) names[id] = std::string(name);
        break;
      }
      case Section::edges:
      case Section::arcs: {
        auto tok = split_ws(line);
        if (tok.size() < 2) throw ParseError(lineno, "expected 'a b [w]'");
        double w = tok.size() >= 3 ? parse_weight(tok[2], lineno) : 1.0;
        if (section == Section::arcs && !warned_arcs && warnings) {
          warnings->push_back("*Arcs symmetrized into undirected edges");
          warned_arcs = true;
        }
        b.add_edge(vertex_of(tok[0], lineno), vertex_of(tok[1], lineno), w);
        break;
      }
      case Section::none:
      case Section::skip:
        throw ParseError(lineno, "data outside of a *Vertices/*Edges/*Arcs section");
    }
  });
  flush_vertices();
  if (b.num_vertices() != static_cast<std::size_t>(std::max(declared, 0LL))) {
    throw ParseError(0, "duplicate vertex names in *Vertices");
  }
  return finish(std::move(b), warnings);
}

// ---------------------------------------------------------------- gml

struct GmlToken {
  enum Kind { key, number, string, open, close, end } kind;
  std::string text;
  std::size_t line;
};

class GmlLexer {
 public:
  explicit GmlLexer(std::string_view text) : text_(text) {}

  GmlToken next() {
    skip_space();
    if (pos_ >= text_.size()) return {GmlToken::end, {}, line_};
    char c = text_[pos_];
    if (c == '[') return ++pos_, GmlToken{GmlToken::open, "[", line_};
    if (c == ']') return ++pos_, GmlToken{GmlToken::close, "]", line_};
    if (c == '"') {
      std::size_t start = ++pos_;
      std::size_t line = line_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ >= text_.size()) throw ParseError(line, "unterminated string");
      return {GmlToken::string, std::string(text_.substr(start, pos_++ - start)), line};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '[' &&
           text_[pos_] != ']') {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    bool numeric = std::isdigit(static_cast<unsigned char>(word[0])) || word[0] == '-' || word[0] == '+' || word[0] == '.';
    return {numeric ? GmlToken::number : GmlToken::key, word, line_};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

/// A GML list block: scalar attributes by key, nested blocks skipped except the ones we ask for.
struct GmlBlock {
  std::map<std::string, GmlToken> attrs;
  std::size_t line = 0;
};

GmlBlock read_block(GmlLexer& lex, std::size_t open_line) {
  GmlBlock block;
  block.line = open_line;
  for (;;) {
    GmlToken k = lex.next();
    if (k.kind == GmlToken::close) return block;
    if (k.kind != GmlToken::key) throw ParseError(k.line, fmt::format("expected key, got '{}'", k.text));
    GmlToken v = lex.next();
    if (v.kind == GmlToken::open) {
      read_block(lex, v.line);  // nested attribute lists (graphics etc.) are ignored
    } else if (v.kind == GmlToken::number || v.kind == GmlToken::string) {
      block.attrs.try_emplace(k.text, v);
    } else {
      throw ParseError(v.line, fmt::format("missing value for key '{}'", k.text));
    }
  }
}

Graph parse_gml(std::string_view text, std::vector<std::string>* warnings) {
  GmlLexer lex(text);
  // locate "graph ["
  for (;;) {
    GmlToken t = lex.next();
    if (t.kind == GmlToken::end) throw ParseError(t.line, "no 'graph [' block");
    if (t.kind == GmlToken::key && t.text == "graph") {
      GmlToken o = lex.next();
      if (o.kind != GmlToken::open) throw ParseError(o.line, "expected '[' after graph");
      break;
    }
  }

  GraphBuilder b;
  std::map<std::string, Vertex> by_id;
  struct PendingEdge {
    std::string source, target;
    double weight;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;
  bool directed = false;

  for (;;) {
    GmlToken k = lex.next();
    if (k.kind == GmlToken::close || k.kind == GmlToken::end) break;
    if (k.kind != GmlToken::key) throw ParseError(k.line, fmt::format("expected key, got '{}'", k.text));
    GmlToken v = lex.next();
    if (v.kind == GmlToken::open) {
      GmlBlock block = read_block(lex, v.line);
      if (k.text == "node") {
        auto id = block.attrs.find("id");
        if (id == block.attrs.end()) throw ParseError(block.line, "node without id");
        auto label = block.attrs.find("label");
        std::string name = label != block.attrs.end() ? label->second.text : id->second.text;
        const std::size_t before = b.num_vertices();
        if (b.add_vertex(name) != before) {
          throw ParseError(block.line, fmt::format("duplicate node label '{}'", name));
        }
        if (!by_id.try_emplace(id->second.text, static_cast<Vertex>(b.num_vertices() - 1)).second) {
          throw ParseError(block.line, fmt::format("duplicate node id {}", id->second.text));
        }
      } else if (k.text == "edge") {
        auto s = block.attrs.find("source");
        auto t = block.attrs.find("target");
        if (s == block.attrs.end() || t == block.attrs.end()) throw ParseError(block.line, "edge without source/target");
        double w = 1.0;
        if (auto it = block.attrs.find("value"); it != block.attrs.end()) {
          w = parse_weight(it->second.text, it->second.line);
        } else if (auto it2 = block.attrs.find("weight"); it2 != block.attrs.end()) {
          w = parse_weight(it2->second.text, it2->second.line);
        }
        pending.push_back({s->second.text, t->second.text, w, block.line});
      }
    } else if (k.text == "directed" && v.text == "1") {
      directed = true;
    }
  }

  for (const PendingEdge& e : pending) {
    auto s = by_id.find(e.source);
    auto t = by_id.find(e.target);
    if (s == by_id.end() || t == by_id.end()) {
      throw ParseError(e.line, fmt::format("edge references unknown node id {}", s == by_id.end() ? e.source : e.target));
    }
    b.add_edge(s->second, t->second, e.weight);
  }
  if (directed && warnings) warnings->push_back("directed GML graph symmetrized into undirected edges");
  return finish(std::move(b), warnings);
}

std::string weight_text(double w) { return fmt::format("{}", w); }

}  // namespace

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist: return "edgelist";
    case GraphFormat::pajek: return "pajek";
    case GraphFormat::gml: return "gml";
  }
  return "?";
}

std::optional<GraphFormat> parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "pajek") return GraphFormat::pajek;
  if (name == "gml") return GraphFormat::gml;
  return std::nullopt;
}

GraphFormat format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return GraphFormat::edgelist;
  std::string ext = lower(path.substr(dot));
  if (ext == ".net" || ext == ".paj") return GraphFormat::pajek;
  if (ext == ".gml") return GraphFormat::gml;
  return GraphFormat::edgelist;
}

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings) {
  switch (format) {
    case GraphFormat::edgelist: return parse_edgelist(text, warnings);
    case GraphFormat::pajek: return parse_pajek(text, warnings);
    case GraphFormat::gml: return parse_gml(text, warnings);
  }
  throw Error(ErrorKind::invalid_argument, "unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  for (const auto& l : g.labels()) {
    if (l.empty() || std::any_of(l.begin(), l.end(), [](unsigned char c) { return std::isspace(c) || c == '"'; })) {
      throw Error(ErrorKind::invalid_argument, fmt::format("label '{}' cannot be serialized", l));
    }
  }
  std::string out;
  const auto edges = g.edges();
  switch (format) {
    case GraphFormat::edgelist: {
      // every label up front so isolated vertices and label order survive the round trip
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out += g.label(v) + "\n";
      }
      for (const Edge& e : edges) {
        out += fmt::format("{} {} {}\n", g.label(e.u), g.label(e.v), weight_text(e.weight));
      }
      break;
    }
    case GraphFormat::pajek: {
      out += fmt::format("*Vertices {}\n", g.num_vertices());
      for (Vertex v = 0; v < g.num_vertices(); ++v) out += fmt::format("{} \"{}\"\n", v + 1, g.label(v));
      out += "*Edges\n";
      for (const Edge& e : edges) out += fmt::format("{} {} {}\n", e.u + 1, e.v + 1, weight_text(e.weight));
      break;
    }
    case GraphFormat::gml: {
      out += "graph [\n  directed 0\n";
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out += fmt::format("  node [ id {} label \"{}\" ]\n", v, g.label(v));
      }
      for (const Edge& e : edges) {
        out += fmt::format("  edge [ source {} target {} value {} ]\n", e.u, e.v, weight_text(e.weight));
      }
      out += "]\n";
      break;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace betent
