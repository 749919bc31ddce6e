#ifndef BEI_CHORDAL_HPP
#define BEI_CHORDAL_HPP

#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Maximum-cardinality search.  Returns the visit order (old vertex ids); ties
// broken by smallest vertex id, so the order is deterministic.
inline std::vector<int> mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0), order;
  order.reserve(n);
  VertexMask unvisited = g.all_vertices();
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (VertexMask m = unvisited; m; m &= m - 1) {
      int v = lowest_bit(m);
      if (best == -1 || weight[v] > weight[best]) best = v;
    }
    order.push_back(best);
    unvisited &= ~(1ull << best);
    for (VertexMask m = g.adjacency(best) & unvisited; m; m &= m - 1) ++weight[lowest_bit(m)];
  }
  return order;
}

// Does `order` (visit sequence of old ids) make every vertex's earlier
// neighbourhood a clique?  This is the perfect-elimination property in the
// "earlier neighbours" convention.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  VertexMask placed = 0;
  for (int v : order) {
    VertexMask earlier = g.adjacency(v) & placed;
    if (!g.is_clique(earlier)) return false;
    placed |= 1ull << v;
  }
  return true;
}

// Chordality test: MCS produces a perfect elimination order iff the graph is
// chordal.  On success returns the labeling sending visit position k to label
// k, i.e. every vertex's lower-labeled neighbourhood is a clique.
inline std::optional<Labeling> is_chordal(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  if (!is_perfect_elimination_order(g, order)) return std::nullopt;
  std::vector<int> label_of(g.n());
  for (int pos = 0; pos < g.n(); ++pos) label_of[order[pos]] = pos;
  return Labeling(std::move(label_of));
}

}  // namespace bei

#endif
