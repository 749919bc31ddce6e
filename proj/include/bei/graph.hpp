#ifndef BEI_GRAPH_HPP
#define BEI_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace bei {

using VertexMask = std::uint64_t;

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_bit(VertexMask m) { return std::countr_zero(m); }

// Simple undirected graph on vertices 0..n-1 (1-based at every I/O boundary),
// adjacency kept as bit masks.  Immutable after construction; n <= 64.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(check_size(n), 0) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges_1based) : Graph(n) {
    for (auto [a, b] : edges_1based) {
      if (a < 1 || a > n_ || b < 1 || b > n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + "-" +
                                    std::to_string(b));
      if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a) + "-" + std::to_string(b));
      add_edge_internal(a - 1, b - 1);
    }
  }

  static Graph from_masks(int n, std::vector<VertexMask> adj) {
    Graph g(n);
    g.adj_ = std::move(adj);
    return g;
  }

  int n() const { return n_; }
  VertexMask adjacency(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return popcount(adj_[v]); }
  VertexMask all_vertices() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  // Edges as 1-based sorted pairs; deterministic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (VertexMask m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
        out.emplace_back(u + 1, lowest_bit(m) + 1);
    return out;
  }

  bool is_clique(VertexMask s) const {
    for (VertexMask m = s; m; m &= m - 1) {
      int v = lowest_bit(m);
      if ((s & ~(adj_[v] | (1ull << v))) != 0) return false;
    }
    return true;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  static int check_size(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in 1..64");
    return n;
  }
  void add_edge_internal(int u, int v) {
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
  }

  int n_;
  std::vector<VertexMask> adj_;
};

// A bijective relabeling of vertices: label_of[v] is the new 0-based label of
// old vertex v.  Applying it to a graph produces the relabeled graph.
class Labeling {
 public:
  explicit Labeling(std::vector<int> label_of_old) : to_new_(std::move(label_of_old)) {
    std::vector<char> seen(to_new_.size(), 0);
    for (int lab : to_new_) {
      if (lab < 0 || lab >= (int)to_new_.size() || seen[lab])
        throw std::invalid_argument("labeling is not a permutation");
      seen[lab] = 1;
    }
  }

  static Labeling identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Labeling(std::move(v));
  }

  int n() const { return (int)to_new_.size(); }
  int operator()(int old_vertex) const { return to_new_[old_vertex]; }
  const std::vector<int>& label_of_old() const { return to_new_; }

  Labeling inverse() const {
    std::vector<int> inv(to_new_.size());
    for (int v = 0; v < (int)to_new_.size(); ++v) inv[to_new_[v]] = v;
    return Labeling(std::move(inv));
  }

  Graph apply(const Graph& g) const {
    std::vector<VertexMask> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
      VertexMask img = 0;
      for (VertexMask m = g.adjacency(v); m; m &= m - 1) img |= 1ull << to_new_[lowest_bit(m)];
      adj[to_new_[v]] = img;
    }
    return Graph::from_masks(g.n(), std::move(adj));
  }

 private:
  std::vector<int> to_new_;
};

namespace detail {

inline int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  bool any = false;
  for (char ch : tok) {
    if (!std::isdigit((unsigned char)ch))
      throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(tok) + "'");
    value = value * 10 + (ch - '0');
    any = true;
    if (value > 1 << 20) throw std::invalid_argument("number out of range in graph input");
  }
  if (!any)
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(tok) + "'");
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
  while (!s.empty() && std::isspace((unsigned char)s.back())) s.remove_suffix(1);
  return s;
}

// "i-j" or "i j", 1-based.
inline std::pair<int, int> parse_edge_token(std::string_view tok) {
  std::size_t sep = tok.find_first_of("- \t");
  if (sep == std::string_view::npos)
    throw std::invalid_argument("malformed edge '" + std::string(tok) + "'");
  auto a = trim(tok.substr(0, sep));
  auto b = trim(tok.substr(sep + 1));
  return {parse_int(a, "edge endpoint"), parse_int(b, "edge endpoint")};
}

}  // namespace detail

// Accepts three formats:
//   1. "n; i-j, k-l, ..."            (declared vertex count, comma-separated edges)
//   2. one edge per line, "i-j" or "i j"; vertex count = max endpoint
//   3. JSON {"n": int, "edges": [[i,j], ...]}
// Vertices are 1-based in all formats.
inline Graph parse_graph(std::string_view text) {
  std::string_view body = detail::trim(text);
  if (body.empty()) throw std::invalid_argument("empty graph input");

  if (body.front() == '{') {
    nlohmann::json j = nlohmann::json::parse(body);
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw std::invalid_argument("graph JSON needs an integer field 'n'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph JSON edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j["n"].get<int>(), edges);
  }

  std::size_t semi = body.find(';');
  if (semi != std::string_view::npos) {
    int n = detail::parse_int(detail::trim(body.substr(0, semi)), "vertex count");
    std::vector<std::pair<int, int>> edges;
    std::string_view rest = body.substr(semi + 1);
    while (true) {
      std::size_t comma = rest.find(',');
      std::string_view tok = detail::trim(rest.substr(0, comma));
      if (!tok.empty()) edges.push_back(detail::parse_edge_token(tok));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Graph(n, edges);
  }

  // One edge per line; n is the largest endpoint seen.
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    std::string_view tok = detail::trim(line);
    if (tok.empty()) continue;
    auto e = detail::parse_edge_token(tok);
    n = std::max({n, e.first, e.second});
    edges.push_back(e);
  }
  return Graph(n, edges);
}

inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ";";
  bool first = true;
  for (auto [a, b] : g.edges()) {
    os << (first ? " " : ", ") << a << "-" << b;
    first = false;
  }
  return os.str();
}

// Connected components as vertex masks, ordered by smallest member.
inline std::vector<VertexMask> connected_components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> comps;
  VertexMask todo = within;
  while (todo) {
    VertexMask comp = 1ull << lowest_bit(todo);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.adjacency(lowest_bit(m));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    todo &= ~comp;
  }
  return comps;
}

inline std::vector<VertexMask> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

// Number of connected components of the induced subgraph on `within`.
inline int component_count(const Graph& g, VertexMask within) {
  return (int)connected_components(g, within).size();
}

inline bool is_connected(const Graph& g) { return component_count(g, g.all_vertices()) == 1; }

struct RestrictResult {
  Graph graph;
  std::vector<int> original_vertex;  // original_vertex[new] = old (0-based)
};

// Induced subgraph on the given vertex mask, vertices renumbered in
// increasing original order.
inline RestrictResult restrict_to(const Graph& g, VertexMask keep) {
  std::vector<int> orig;
  std::vector<int> new_of(g.n(), -1);
  for (VertexMask m = keep; m; m &= m - 1) {
    new_of[lowest_bit(m)] = (int)orig.size();
    orig.push_back(lowest_bit(m));
  }
  if (orig.empty()) throw std::invalid_argument("cannot restrict to the empty vertex set");
  std::vector<VertexMask> adj(orig.size(), 0);
  for (std::size_t v = 0; v < orig.size(); ++v)
    for (VertexMask m = g.adjacency(orig[v]) & keep; m; m &= m - 1)
      adj[v] |= 1ull << new_of[lowest_bit(m)];
  return {Graph::from_masks((int)orig.size(), std::move(adj)), std::move(orig)};
}

// Acyclicity check: every component must satisfy |E| = |V| - 1.
inline bool is_forest(const Graph& g) {
  for (VertexMask comp : connected_components(g)) {
    int verts = popcount(comp);
    int edges = 0;
    for (VertexMask m = comp; m; m &= m - 1) edges += popcount(g.adjacency(lowest_bit(m)) & comp);
    if (edges / 2 != verts - 1) return false;
  }
  return true;
}

}  // namespace bei

#endif
