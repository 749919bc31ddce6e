#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "bei/bei.hpp"
#include "oracles.hpp"

using bei::Graph;
using bei::Labeling;

namespace {

std::vector<std::vector<int>> mask_components_as_lists(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (bei::VertexMask m : bei::connected_components(g)) {
    std::vector<int> comp;
    for (int v = 0; v < g.n(); ++v)
      if ((m >> v) & 1ull) comp.push_back(v);
    out.push_back(comp);
  }
  return out;
}

}  // namespace

TEST_CASE("graph parsing accepts the three supported formats") {
  Graph a = bei::parse_graph("5; 1-2, 1-3, 2-3, 2-4, 3-4, 2-5, 3-5");
  CHECK(a.n() == 5);
  CHECK(a.edge_count() == 7);
  CHECK(a.has_edge(1, 4));  // 0-based: the edge {2,5}

  Graph b = bei::parse_graph(R"({"n": 5, "edges": [[1,2],[1,3],[2,3],[2,4],[3,4],[2,5],[3,5]]})");
  CHECK(a == b);

  Graph c = bei::parse_graph("1 2\n1 3\n2 3\n2 4\n3 4\n2 5\n3 5\n");
  CHECK(a == c);

  Graph d = bei::parse_graph("4; 1-2");
  CHECK(d.n() == 4);
  CHECK(d.edge_count() == 1);
}

TEST_CASE("graph parsing rejects malformed input") {
  CHECK_THROWS(bei::parse_graph(""));
  CHECK_THROWS(bei::parse_graph("3; 1-1"));       // loop
  CHECK_THROWS(bei::parse_graph("3; 1-4"));       // out of range
  CHECK_THROWS(bei::parse_graph("3; 1-2, bogus"));
  CHECK_THROWS(bei::parse_graph("0;"));
  CHECK_THROWS(bei::parse_graph(R"({"n": 2, "edges": [[1]]})"));
}

TEST_CASE("round trip through text form") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      Graph back = bei::parse_graph(bei::to_text(g));
      CHECK(g == back);
    }
}

TEST_CASE("connected components match a plain DFS") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      auto got = mask_components_as_lists(g);
      auto want = oracle::components(g);
      REQUIRE(got == want);
      CHECK(bei::component_count(g, g.all_vertices()) == (int)want.size());
      CHECK(bei::is_connected(g) == (want.size() == 1));
    }
}

TEST_CASE("restriction keeps the selected vertices and their edges") {
  Graph g = bei::parse_graph("5; 1-2, 2-3, 3-4, 4-5, 5-1");
  bei::RestrictResult r = bei::restrict_to(g, 0b01011ull);  // vertices 1, 2, 4
  CHECK(r.graph.n() == 3);
  CHECK(r.original_vertex == std::vector<int>{0, 1, 3});
  CHECK(r.graph.has_edge(0, 1));   // 1-2 survives
  CHECK(!r.graph.has_edge(0, 2));  // 1-4 was no edge
  CHECK(!r.graph.has_edge(1, 2));  // 2-4 was no edge
  CHECK_THROWS(bei::restrict_to(g, 0ull));
}

TEST_CASE("forest recognition agrees with the cycle-free definition") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      // Each edge lies inside one component and a component with a cycle has
      // at least as many edges as vertices, so the graph is a forest exactly
      // when the total edge count is sum(|component| - 1).
      auto comps = oracle::components(g);
      int edges_needed = 0;
      for (const auto& c : comps) edges_needed += (int)c.size() - 1;
      CHECK(bei::is_forest(g) == (g.edge_count() == edges_needed));
    }
}

TEST_CASE("chordality agrees with greedy simplicial elimination") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      bool want = oracle::chordal_by_elimination(g);
      auto got = bei::is_chordal(g);
      REQUIRE(got.has_value() == want);
      if (got) {
        // The labeling's visit sequence must be a perfect elimination order.
        std::vector<int> order(g.n());
        for (int v = 0; v < g.n(); ++v) order[got->label_of_old()[v]] = v;
        CHECK(bei::is_perfect_elimination_order(g, order));
      }
    }
  CHECK(!bei::is_chordal(bei::parse_graph("4; 1-2, 2-3, 3-4, 4-1")).has_value());
  CHECK(!bei::is_chordal(bei::parse_graph("6; 1-2, 2-3, 3-4, 4-5, 5-6, 6-1")).has_value());
}

TEST_CASE("maximal cliques match the brute-force list") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      bei::CliqueComplex cc = bei::clique_complex(g);
      std::vector<std::vector<int>> got;
      for (bei::VertexMask f : cc.facets) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
          if ((f >> v) & 1ull) verts.push_back(v + 1);
        got.push_back(verts);
      }
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::brute_max_cliques(g));
    }
}

TEST_CASE("a clique complex has a leaf order exactly for chordal graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_graphs(n, bei::GraphFilter::all)) {
      bool chordal = bei::is_chordal(g).has_value();
      bei::CliqueComplex cc = bei::clique_complex(g);
      auto order = bei::leaf_order(cc);
      CHECK(order.has_value() == chordal);
      if (order) CHECK(bei::is_leaf_order(cc, *order));
    }
}

TEST_CASE("chains of cliques are chordal and include all closed graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : bei::enumerate_connected_graphs(n)) {
      bool chain = bei::chain_of_cliques(bei::clique_complex(g)).has_value();
      if (chain) CHECK(bei::is_chordal(g).has_value());
      if (bei::is_closed(g)) CHECK(chain);
    }
}

TEST_CASE("labeling operations compose correctly") {
  Labeling lab({2, 0, 1, 3});  // vertex 0 -> label 2, vertex 1 -> label 0, ...
  CHECK(lab(0) == 2);
  CHECK(lab.inverse()(2) == 0);
  for (int v = 0; v < 4; ++v) CHECK(lab.inverse()(lab(v)) == v);
  CHECK(Labeling::identity(4)(3) == 3);
  CHECK_THROWS(Labeling({0, 0, 1}));

  Graph g = bei::parse_graph("4; 1-2, 2-3, 3-4");
  Graph h = lab.apply(g);
  CHECK(h.edge_count() == g.edge_count());
  // Edge {v, w} maps to {lab(v), lab(w)}.
  for (auto [a, b] : g.edges()) CHECK(h.has_edge(lab(a - 1), lab(b - 1)));
}

TEST_CASE("vertex and edge accessors agree with the parsed description") {
  Graph g = bei::parse_graph("5; 1-2, 2-3, 3-4, 4-5");
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  CHECK(bei::popcount(g.all_vertices()) == 5);
  auto edges = g.edges();
  CHECK(edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
}
