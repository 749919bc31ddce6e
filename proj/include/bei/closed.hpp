#ifndef BEI_CLOSED_HPP
#define BEI_CLOSED_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bei/cliques.hpp"
#include "bei/graph.hpp"

namespace bei {

// A graph is closed with respect to a labeling iff for every vertex both the
// set of higher-labeled neighbours and the set of lower-labeled neighbours
// form cliques.  (Equivalently: the quadratic generators of the edge ideal
// are a Gröbner basis under the induced lex order.)
inline bool is_closed_wrt(const Graph& g, const Labeling& lab) {
  if (lab.n() != g.n()) throw std::invalid_argument("labeling size does not match graph");
  const Graph h = lab.apply(g);
  for (int v = 0; v < h.n(); ++v) {
    VertexMask lower = h.adjacency(v) & ((1ull << v) - 1);
    VertexMask upper = h.adjacency(v) & ~((2ull << v) - 1);
    if (!h.is_clique(lower) || !h.is_clique(upper)) return false;
  }
  return true;
}

namespace detail {

// Backtracking search for a vertex order of one connected component making
// every maximal clique an interval of consecutive positions.  `open` tracks
// facets that have started but not finished; the next vertex must belong to
// all of them and to no finished facet.
struct IntervalSearch {
  const std::vector<VertexMask>& facets;
  std::vector<int> placed_in;  // vertices placed per facet
  std::vector<int> order;
  VertexMask remaining;
  std::uint64_t open = 0, finished = 0;

  bool facet_has(std::size_t f, int v) const { return (facets[f] >> v) & 1; }

  bool run() {
    if (!remaining) return true;
    VertexMask candidates = remaining;
    for (std::uint64_t m = open; m; m &= m - 1) candidates &= facets[lowest_bit(m)];
    for (VertexMask c = candidates; c; c &= c - 1) {
      int v = lowest_bit(c);
      bool blocked = false;
      for (std::uint64_t m = finished; m; m &= m - 1)
        if (facet_has(lowest_bit(m), v)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      // place v
      std::uint64_t touched = 0;
      for (std::size_t f = 0; f < facets.size(); ++f)
        if (facet_has(f, v)) touched |= 1ull << f;
      std::uint64_t newly_done = 0;
      for (std::uint64_t m = touched; m; m &= m - 1) {
        int f = lowest_bit(m);
        if (++placed_in[f] == popcount(facets[f])) newly_done |= 1ull << f;
      }
      std::uint64_t old_open = open;
      open = (open | touched) & ~newly_done;
      finished |= newly_done;
      order.push_back(v);
      remaining &= ~(1ull << v);
      if (run()) return true;
      remaining |= 1ull << v;
      order.pop_back();
      finished &= ~newly_done;
      open = old_open;
      for (std::uint64_t m = touched; m; m &= m - 1) --placed_in[lowest_bit(m)];
    }
    return false;
  }
};

}  // namespace detail

// Searches for a labeling that witnesses closedness.  Components are handled
// independently (a graph is closed iff each component is) and receive
// consecutive label blocks in order of their smallest original vertex.
inline std::optional<Labeling> find_closed_labeling(const Graph& g) {
  std::vector<int> label_of(g.n(), -1);
  int base = 0;
  for (VertexMask comp : connected_components(g)) {
    auto sub = restrict_to(g, comp);
    CliqueComplex cc = clique_complex(sub.graph);
    if (cc.facet_count() > 64) throw std::invalid_argument("too many facets for closed-labeling search");
    detail::IntervalSearch search{cc.facets,
                                  std::vector<int>(cc.facets.size(), 0),
                                  {},
                                  sub.graph.all_vertices()};
    if (!search.run()) return std::nullopt;
    for (std::size_t pos = 0; pos < search.order.size(); ++pos)
      label_of[sub.original_vertex[search.order[pos]]] = base + (int)pos;
    base += sub.graph.n();
  }
  Labeling lab{std::move(label_of)};
  if (!is_closed_wrt(g, lab)) throw std::logic_error("closed-labeling search produced a non-witness");
  return lab;
}

inline bool is_closed(const Graph& g) { return find_closed_labeling(g).has_value(); }

}  // namespace bei

#endif
