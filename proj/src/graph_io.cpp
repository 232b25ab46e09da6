#include "dact/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace dact {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  struct Row {
    std::uint64_t id;
    Edge e;
    std::string name;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertices") {
      if (n) throw ParseError(line_no, "duplicate 'vertices' line");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      n = parse_uint(tok[1], line_no);
      if (*n == 0) throw ParseError(line_no, "vertex count must be positive");
    } else if (tok[0] == "edge") {
      if (!n) throw ParseError(line_no, "'edge' before 'vertices'");
      if (tok.size() != 4 && tok.size() != 5) throw ParseError(line_no, "expected 'edge <id> <u> <v> [name]'");
      Row r{parse_uint(tok[1], line_no),
            {static_cast<VertexId>(parse_uint(tok[2], line_no)), static_cast<VertexId>(parse_uint(tok[3], line_no))},
            tok.size() == 5 ? std::string(tok[4]) : std::string(),
            line_no};
      if (r.e.a >= *n || r.e.b >= *n) throw ParseError(line_no, "endpoint out of range");
      rows.push_back(std::move(r));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'vertices' line");
  if (rows.size() > kMaxEdges) throw ParseError(rows[kMaxEdges].line, "more than 64 edges");
  std::vector<Edge> edges(rows.size());
  std::vector<bool> seen(rows.size(), false);
  bool named = !rows.empty() && !rows.front().name.empty();
  std::vector<std::string> names(named ? rows.size() : 0);
  for (const Row& r : rows) {
    if (r.id >= rows.size()) throw ParseError(r.line, "edge ids must be 0..m-1");
    if (seen[r.id]) throw ParseError(r.line, "duplicate edge id " + std::to_string(r.id));
    if (named != !r.name.empty()) throw ParseError(r.line, "either all edges are named or none");
    seen[r.id] = true;
    edges[r.id] = r.e;
    if (named) names[r.id] = r.name;
  }
  try {
    return Graph(*n, std::move(edges), std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Graph& g) {
  if (g.edges() != EdgeSet::first(g.edge_capacity())) throw Error("cannot write a graph with removed edge ids");
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (EdgeId e : g.edges()) {
    out << "edge " << e << " " << g.edge(e).a << " " << g.edge(e).b;
    if (g.has_explicit_names()) out << " " << g.edge_name(e);
    out << "\n";
  }
  return out.str();
}

}  // namespace dact
