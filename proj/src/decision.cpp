#include "dact/decision.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>

namespace dact {

char to_char(Direction d) { return d == Direction::Left ? 'l' : 'r'; }

// ---------------------------------------------------------------- explicit trees

ExplicitTree::ExplicitTree(std::vector<Node> nodes, EdgeSet universe)
    : nodes_(std::move(nodes)), universe_(universe), checked_(universe.size() <= kMaxExplicitDepth) {
  if (nodes_.empty()) throw Error("decision tree has no nodes");
  for (const Node& n : nodes_) {
    auto bad = [&](std::int32_t c) { return c < -1 || c >= static_cast<std::int32_t>(nodes_.size()); };
    if (bad(n.left) || bad(n.right)) throw Error("decision tree child index out of range");
  }
  if (checked_) validate_all();
}

void ExplicitTree::validate_all() const {
  const std::size_t m = universe_.size();
  std::function<void(std::int32_t, std::size_t, EdgeSet)> walk = [&](std::int32_t i, std::size_t depth, EdgeSet used) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (!universe_.contains(n.label)) throw Error("decision tree label is not an edge");
    if (used.contains(n.label)) throw Error("decision tree repeats a label on a path");
    used.insert(n.label);
    bool leaf = n.left < 0 && n.right < 0;
    if (depth + 1 == m) {
      if (!leaf) throw Error("decision tree is deeper than the number of edges");
      return;
    }
    if (n.left < 0 || n.right < 0) throw Error("decision tree path shorter than the number of edges");
    walk(n.left, depth + 1, used);
    walk(n.right, depth + 1, used);
  };
  walk(0, 0, {});
}

EdgeId ExplicitTree::next_edge(std::span<const Direction> prefix) const {
  if (prefix.size() >= universe_.size()) throw Error("direction prefix too long");
  std::size_t i = 0;
  EdgeSet used;
  for (Direction d : prefix) {
    if (!checked_) {
      if (used.contains(nodes_[i].label) || !universe_.contains(nodes_[i].label))
        throw Error("decision tree repeats a label on a path");
      used.insert(nodes_[i].label);
    }
    std::int32_t c = d == Direction::Left ? nodes_[i].left : nodes_[i].right;
    if (c < 0) throw Error("decision tree path shorter than the number of edges");
    i = static_cast<std::size_t>(c);
  }
  if (!checked_ && (used.contains(nodes_[i].label) || !universe_.contains(nodes_[i].label)))
    throw Error("decision tree repeats a label on a path");
  return nodes_[i].label;
}

namespace {

struct SexprParser {
  std::string_view text;
  const Graph& g;
  std::vector<ExplicitTree::Node> nodes;
  std::size_t pos = 0;

  std::size_t line() const { return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n')); }

  void skip() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      else if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else break;
    }
  }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(line(), std::string("expected '") + c + "'");
    ++pos;
  }

  std::int32_t node() {
    expect('(');
    skip();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    if (pos == start) throw ParseError(line(), "missing node label");
    std::string label(text.substr(start, pos - start));
    auto e = g.find_edge(label);
    if (!e || !g.has_edge(*e)) throw ParseError(line(), "unknown edge '" + label + "'");
    auto idx = static_cast<std::int32_t>(nodes.size());
    nodes.push_back({*e, -1, -1});
    skip();
    if (pos < text.size() && text[pos] == '(') {
      std::int32_t l = node();
      std::int32_t r = node();
      nodes[static_cast<std::size_t>(idx)].left = l;
      nodes[static_cast<std::size_t>(idx)].right = r;
    }
    expect(')');
    return idx;
  }
};

}  // namespace

std::shared_ptr<const ExplicitTree> parse_decision_tree(std::string_view text, const Graph& g) {
  SexprParser p{text, g, {}};
  p.node();
  p.skip();
  if (p.pos != text.size()) throw ParseError(p.line(), "trailing text after decision tree");
  try {
    return std::make_shared<const ExplicitTree>(std::move(p.nodes), g.edges());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
}

OrderMapTable parse_order_map(std::string_view text, const Graph& g) {
  OrderMapTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string tree_tok;
    if (!(words >> tree_tok)) continue;
    if (tree_tok.size() < 2 || tree_tok.front() != '{' || tree_tok.back() != '}')
      throw ParseError(line_no, "expected a tree '{e1,e2,...}'");
    try {
      EdgeSet tree = g.parse_edge_list(std::string_view(tree_tok).substr(1, tree_tok.size() - 2));
      std::vector<EdgeId> order;
      EdgeSet seen;
      for (std::string name; words >> name;) {
        auto found = g.find_edge(name);
        if (!found) throw Error("unknown edge '" + name + "'");
        EdgeId e = *found;
        if (seen.contains(e)) throw Error("edge " + name + " repeated");
        seen.insert(e);
        order.push_back(e);
      }
      if (seen != g.edges()) throw Error("ordering must list every edge once");
      if (!is_spanning_tree(g, tree)) throw Error(tree_tok + " is not a spanning tree");
      if (!table.emplace(tree, std::move(order)).second) throw Error("duplicate tree " + tree_tok);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(line_no, err.what());
    }
  }
  return table;
}

std::string format_order_map(const OrderMapTable& table, const Graph& g) {
  std::string out;
  for (const auto& [tree, order] : table) {
    out += g.format_edge_set(tree);
    for (EdgeId e : order) out += " " + g.edge_name(e);
    out += "\n";
  }
  return out;
}

std::string format_decision_tree(const ExplicitTree& t, const Graph& g) {
  const auto& nodes = t.nodes();
  std::function<std::string(std::int32_t)> fmt = [&](std::int32_t i) {
    const auto& n = nodes[static_cast<std::size_t>(i)];
    std::string s = "(" + g.edge_name(n.label);
    if (n.left >= 0) {
      const auto& l = nodes[static_cast<std::size_t>(n.left)];
      bool leaf_children = l.left < 0;
      s += " " + fmt(n.left) + (leaf_children ? "" : " ") + fmt(n.right);
    }
    return s + ")";
  };
  return fmt(0);
}

std::shared_ptr<const ExplicitTree> materialize(const DecisionOracle& o) {
  const std::size_t m = o.universe().size();
  if (m > kMaxExplicitDepth) throw Error("materialization limited to 16 edges");
  if (m == 0) throw Error("cannot materialize an oracle over no edges");
  std::vector<ExplicitTree::Node> nodes;
  std::vector<Direction> prefix;
  std::function<std::int32_t()> build = [&]() {
    auto idx = static_cast<std::int32_t>(nodes.size());
    nodes.push_back({o.next_edge(prefix), -1, -1});
    if (prefix.size() + 1 < m) {
      prefix.push_back(Direction::Left);
      std::int32_t l = build();
      prefix.back() = Direction::Right;
      std::int32_t r = build();
      prefix.pop_back();
      nodes[static_cast<std::size_t>(idx)].left = l;
      nodes[static_cast<std::size_t>(idx)].right = r;
    }
    return idx;
  };
  build();
  return std::make_shared<const ExplicitTree>(std::move(nodes), o.universe());
}

bool is_decision_function(const DecisionOracle& o) {
  const std::size_t m = o.universe().size();
  if (m > 20) throw Error("exhaustive oracle check limited to 20 edges");
  std::vector<Direction> prefix;
  std::function<bool(EdgeSet)> walk = [&](EdgeSet used) {
    EdgeId e = o.next_edge(prefix);
    if (!o.universe().contains(e) || used.contains(e)) return false;
    used.insert(e);
    if (prefix.size() + 1 == m) return used == o.universe();
    for (Direction d : {Direction::Left, Direction::Right}) {
      prefix.push_back(d);
      bool ok = walk(used);
      prefix.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return m == 0 || walk({});
}

// ---------------------------------------------------------------- linear orders

namespace {

void require_permutation(const Graph& g, const std::vector<EdgeId>& order) {
  EdgeSet seen;
  for (EdgeId e : order) {
    if (!g.has_edge(e) || seen.contains(e)) throw Error("order is not a permutation of the edges");
    seen.insert(e);
  }
  if (seen != g.edges()) throw Error("order is not a permutation of the edges");
}

class LinearOracle final : public DecisionOracle {
 public:
  LinearOracle(EdgeSet universe, std::vector<EdgeId> order) : universe_(universe), order_(std::move(order)) {}
  EdgeId next_edge(std::span<const Direction> prefix) const override {
    if (prefix.size() >= order_.size()) throw Error("direction prefix too long");
    return order_[order_.size() - 1 - prefix.size()];
  }
  EdgeSet universe() const override { return universe_; }

 private:
  EdgeSet universe_;
  std::vector<EdgeId> order_;
};

}  // namespace

OraclePtr from_linear_order(const Graph& g, std::vector<EdgeId> order) {
  require_permutation(g, order);
  return std::make_shared<const LinearOracle>(g.edges(), std::move(order));
}

// ---------------------------------------------------------------- order maps

namespace {

void require_complete(const Graph& g, const OrderMapTable& table) {
  auto trees = spanning_trees(g);
  if (trees.size() != table.size()) throw Error("order map does not cover exactly the spanning trees");
  for (EdgeSet t : trees) {
    auto it = table.find(t);
    if (it == table.end()) throw Error("order map misses tree " + g.format_edge_set(t));
    require_permutation(g, it->second);
  }
}

class OrderMapOracle final : public DecisionOracle {
 public:
  OrderMapOracle(EdgeSet universe, OrderMapTable table) : universe_(universe) {
    for (auto& [t, order] : table) entries_.emplace_back(t, std::move(order));
  }

  EdgeId next_edge(std::span<const Direction> prefix) const override {
    if (prefix.size() >= universe_.size()) throw Error("direction prefix too long");
    std::vector<std::size_t> live(entries_.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    EdgeSet used;
    for (std::size_t k = 0;; ++k) {
      EdgeId eta;
      if (!live.empty()) eta = entries_[live.front()].second[k];
      else eta = (universe_ - used).min();
      if (k == prefix.size()) return eta;
      used.insert(eta);
      bool want = prefix[k] == Direction::Right;
      std::erase_if(live, [&](std::size_t i) { return entries_[i].first.contains(eta) != want; });
    }
  }
  EdgeSet universe() const override { return universe_; }

 private:
  EdgeSet universe_;
  std::vector<std::pair<EdgeSet, std::vector<EdgeId>>> entries_;
};

}  // namespace

std::optional<CompatibilityWitness> check_tree_compatible(const Graph& g, const OrderMapTable& table) {
  require_complete(g, table);
  const std::size_t m = g.edge_count();
  for (const auto& [t, phi] : table) {
    for (const auto& [u, psi] : table) {
      if (t == u) continue;
      // antecedent for k holds while T and T' agree on phi_1..phi_k(T)
      for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) {
          EdgeId e = phi[k - 1];
          if (t.contains(e) != u.contains(e)) break;
        }
        // j ranges up to k+1; lower j were checked at smaller k
        if (phi[k] != psi[k]) return CompatibilityWitness{t, u, k};
      }
    }
  }
  return std::nullopt;
}

OraclePtr from_order_map(const Graph& g, OrderMapTable table) {
  if (auto w = check_tree_compatible(g, table))
    throw Error("order map is not tree-compatible (trees " + g.format_edge_set(w->tree) + " and " +
                g.format_edge_set(w->other) + ", k=" + std::to_string(w->k) + ")");
  return std::make_shared<const OrderMapOracle>(g.edges(), std::move(table));
}

// ---------------------------------------------------------------- random oracles

namespace {

// SplitMix64 output stream: cheap to seed per node, unlike mt19937_64.
struct SplitMix64 {
  using result_type = std::uint64_t;
  std::uint64_t state;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

class RandomOracle final : public DecisionOracle {
 public:
  RandomOracle(EdgeSet universe, std::uint64_t seed) : universe_(universe), seed_(seed) {}

  EdgeId next_edge(std::span<const Direction> prefix) const override {
    if (prefix.size() >= universe_.size()) throw Error("direction prefix too long");
    EdgeSet unused = universe_;
    std::uint64_t path = 1;  // leading 1 keeps prefixes of different length apart
    for (std::size_t k = 0;; ++k) {
      EdgeId e = pick(unused, path);
      if (k == prefix.size()) return e;
      unused.erase(e);
      path = (path << 1) | (prefix[k] == Direction::Right ? 1u : 0u);
    }
  }
  EdgeSet universe() const override { return universe_; }

 private:
  EdgeId pick(EdgeSet unused, std::uint64_t path) const {
    SplitMix64 mix{seed_};
    SplitMix64 rng{mix() ^ path};
    std::uniform_int_distribution<std::size_t> dist(0, unused.size() - 1);
    auto it = unused.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(dist(rng)));
    return *it;
  }

  EdgeSet universe_;
  std::uint64_t seed_;
};

}  // namespace

OraclePtr random_oracle(const Graph& g, std::uint64_t seed) {
  if (g.edge_count() > 63) throw Error("random oracle limited to 63 edges");
  return std::make_shared<const RandomOracle>(g.edges(), seed);
}

}  // namespace dact
