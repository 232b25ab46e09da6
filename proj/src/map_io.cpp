#include "dact/map_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "dact/graph_io.hpp"

namespace dact {

namespace {

using Cycles = std::vector<std::vector<std::string>>;

Cycles parse_cycles(std::string_view body, std::size_t line) {
  Cycles out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  while (true) {
    skip();
    if (i == body.size()) break;
    if (body[i] != '(') throw ParseError(line, "expected '(' in cycle notation");
    ++i;
    out.emplace_back();
    while (true) {
      skip();
      if (i == body.size()) throw ParseError(line, "unterminated cycle");
      if (body[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) && body[j] != '(' &&
             body[j] != ')')
        ++j;
      if (j == i) throw ParseError(line, "unexpected '('");
      out.back().emplace_back(body.substr(i, j - i));
      i = j;
    }
    if (out.back().empty()) throw ParseError(line, "empty cycle");
  }
  return out;
}

}  // namespace

CombMap parse_map(std::string_view text) {
  std::optional<std::size_t> count;
  std::optional<std::pair<Cycles, std::size_t>> sigma_line, alpha_line;
  std::optional<std::pair<std::string, std::size_t>> root_line;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    line = line.substr(b);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    std::size_t sp = 0;
    while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp]))) ++sp;
    std::string_view key = line.substr(0, sp);
    std::string_view rest = line.substr(sp);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    if (key == "halfedges") {
      if (count) throw ParseError(line_no, "duplicate 'halfedges' line");
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
      if (ec != std::errc() || p != rest.data() + rest.size()) throw ParseError(line_no, "expected 'halfedges N'");
      count = v;
    } else if (key == "sigma") {
      if (sigma_line) throw ParseError(line_no, "duplicate 'sigma' line");
      sigma_line.emplace(parse_cycles(rest, line_no), line_no);
    } else if (key == "alpha") {
      if (alpha_line) throw ParseError(line_no, "duplicate 'alpha' line");
      alpha_line.emplace(parse_cycles(rest, line_no), line_no);
    } else if (key == "root") {
      if (root_line) throw ParseError(line_no, "duplicate 'root' line");
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
        throw ParseError(line_no, "expected 'root <half-edge>'");
      root_line.emplace(std::string(rest), line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!count) throw ParseError(line_no, "missing 'halfedges' line");
  if (!sigma_line) throw ParseError(line_no, "missing 'sigma' line");
  if (!alpha_line) throw ParseError(line_no, "missing 'alpha' line");
  if (!root_line) throw ParseError(line_no, "missing 'root' line");

  std::map<std::string, HalfEdge> id;
  std::vector<std::string> names;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = id.try_emplace(name, static_cast<HalfEdge>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };
  for (const auto& cyc : sigma_line->first)
    for (const auto& n : cyc) intern(n);
  for (const auto& cyc : alpha_line->first)
    for (const auto& n : cyc) intern(n);
  const std::size_t n = names.size();
  if (n != *count)
    throw ParseError(alpha_line->second, "declared " + std::to_string(*count) + " half-edges, found " +
                                             std::to_string(n));

  std::vector<HalfEdge> sigma(n, kNoHalfEdge);
  for (HalfEdge h = 0; h < n; ++h) sigma[h] = h;
  std::vector<bool> in_sigma(n, false);
  for (const auto& cyc : sigma_line->first) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      HalfEdge h = id[cyc[i]];
      if (in_sigma[h]) throw ParseError(sigma_line->second, "half-edge '" + cyc[i] + "' repeated in sigma");
      in_sigma[h] = true;
      sigma[h] = id[cyc[(i + 1) % cyc.size()]];
    }
  }
  std::vector<HalfEdge> alpha(n, kNoHalfEdge);
  std::vector<std::pair<HalfEdge, HalfEdge>> halves;
  for (const auto& cyc : alpha_line->first) {
    if (cyc.size() != 2) throw ParseError(alpha_line->second, "alpha cycles must have length 2");
    HalfEdge a = id[cyc[0]], b = id[cyc[1]];
    if (a == b || alpha[a] != kNoHalfEdge || alpha[b] != kNoHalfEdge)
      throw ParseError(alpha_line->second, "alpha is not a fixed-point-free involution");
    alpha[a] = b;
    alpha[b] = a;
    halves.emplace_back(a, b);
  }
  for (HalfEdge h = 0; h < n; ++h)
    if (alpha[h] == kNoHalfEdge) throw ParseError(alpha_line->second, "half-edge '" + names[h] + "' missing from alpha");
  auto root = id.find(root_line->first);
  if (root == id.end()) throw ParseError(root_line->second, "unknown root '" + root_line->first + "'");
  try {
    return CombMap(std::move(sigma), std::move(alpha), root->second, std::move(names), std::move(halves));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
}

CombMap read_map_file(const std::string& path) { return parse_map(read_text_file(path)); }

std::string format_map(const CombMap& m) {
  if (m.edges() != EdgeSet::first(m.edge_capacity())) throw Error("cannot write a map with removed edges");
  std::ostringstream out;
  out << "halfedges " << m.half_edge_capacity() << "\nsigma ";
  for (const auto& cyc : m.sigma_cycles()) {
    out << "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << m.half_edge_name(cyc[i]);
    out << ")";
  }
  out << "\nalpha ";
  for (EdgeId e : m.edges()) {
    auto [a, b] = m.half_edges_of(e);
    out << "(" << m.half_edge_name(a) << " " << m.half_edge_name(b) << ")";
  }
  out << "\nroot " << m.half_edge_name(m.root()) << "\n";
  return out.str();
}

}  // namespace dact
