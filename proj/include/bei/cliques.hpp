#ifndef BEI_CLIQUES_HPP
#define BEI_CLIQUES_HPP

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"

namespace bei {

// The clique complex of a graph: its facets are the maximal cliques.
// Isolated vertices appear as singleton facets.
struct CliqueComplex {
  int n = 0;
  std::vector<VertexMask> facets;  // sorted canonically, see clique_complex()

  int facet_count() const { return (int)facets.size(); }
};

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
                          std::vector<VertexMask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P|X with most neighbours in P.
  int pivot = -1, best = -1;
  for (VertexMask m = p | x; m; m &= m - 1) {
    int v = lowest_bit(m);
    int cnt = popcount(g.adjacency(v) & p);
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  for (VertexMask cand = p & ~g.adjacency(pivot); cand; cand &= cand - 1) {
    int v = lowest_bit(cand);
    bron_kerbosch(g, r | (1ull << v), p & g.adjacency(v), x & g.adjacency(v), out);
    p &= ~(1ull << v);
    x |= 1ull << v;
  }
}

// Canonical facet order: compare as sorted vertex lists, lexicographically.
inline bool facet_less(VertexMask a, VertexMask b) {
  while (a && b) {
    int va = lowest_bit(a), vb = lowest_bit(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

// All maximal cliques.  For chordal graphs the candidates {v} ∪ earlier
// neighbours along a perfect elimination order already contain every maximal
// clique; otherwise Bron–Kerbosch with pivoting.
inline CliqueComplex clique_complex(const Graph& g) {
  std::vector<VertexMask> facets;
  if (auto peo = is_chordal(g)) {
    std::vector<int> order = peo->inverse().label_of_old();  // visit sequence
    VertexMask placed = 0;
    std::vector<VertexMask> cand;
    for (int v : order) {
      cand.push_back((g.adjacency(v) & placed) | (1ull << v));
      placed |= 1ull << v;
    }
    for (VertexMask c : cand) {
      bool maximal = true;
      for (VertexMask d : cand)
        if (c != d && (c & ~d) == 0) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(c);
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  } else {
    detail::bron_kerbosch(g, 0, g.all_vertices(), 0, facets);
  }
  std::sort(facets.begin(), facets.end(), detail::facet_less);
  return {g.n(), std::move(facets)};
}

// Number of maximal cliques containing each vertex.
inline std::vector<int> facet_membership_counts(const CliqueComplex& cc) {
  std::vector<int> cnt(cc.n, 0);
  for (VertexMask f : cc.facets)
    for (VertexMask m = f; m; m &= m - 1) ++cnt[lowest_bit(m)];
  return cnt;
}

// Do all pairs of distinct maximal cliques meet in at most one vertex?
inline bool clique_intersections_at_most_one(const CliqueComplex& cc) {
  for (std::size_t i = 0; i < cc.facets.size(); ++i)
    for (std::size_t j = i + 1; j < cc.facets.size(); ++j)
      if (popcount(cc.facets[i] & cc.facets[j]) > 1) return false;
  return true;
}

namespace detail {

// Is `f` a leaf of the complex whose other facets are `prior`?  A branch is a
// prior facet g with h ∩ f ⊆ g ∩ f for every prior facet h.
inline bool is_leaf_against(const std::vector<VertexMask>& facets, const std::vector<int>& prior,
                            int f) {
  if (prior.empty()) return true;
  for (int gi : prior) {
    VertexMask gf = facets[gi] & facets[f];
    bool branch = true;
    for (int hi : prior)
      if ((facets[hi] & facets[f] & ~gf) != 0) {
        branch = false;
        break;
      }
    if (branch) return true;
  }
  return false;
}

inline bool leaf_order_search(const std::vector<VertexMask>& facets, std::vector<int>& chosen,
                              std::uint64_t remaining, std::unordered_set<std::uint64_t>& dead) {
  if (!remaining) return true;
  if (dead.count(remaining)) return false;
  for (std::uint64_t m = remaining; m; m &= m - 1) {
    int f = lowest_bit(m);
    if (!is_leaf_against(facets, chosen, f)) continue;
    chosen.push_back(f);
    if (leaf_order_search(facets, chosen, remaining & ~(1ull << f), dead)) return true;
    chosen.pop_back();
  }
  dead.insert(remaining);
  return false;
}

}  // namespace detail

// Checks that facets[order[0]], facets[order[1]], ... is a leaf order: each
// facet after the first is a leaf of the complex spanned so far.
inline bool is_leaf_order(const CliqueComplex& cc, const std::vector<int>& order) {
  if ((int)order.size() != cc.facet_count()) return false;
  std::vector<int> prior;
  for (int f : order) {
    if (!detail::is_leaf_against(cc.facets, prior, f)) return false;
    prior.push_back(f);
  }
  return true;
}

// Searches for a leaf order of the facets (the quasi-forest property).  For
// chordal graphs one always exists; returns facet indices into cc.facets.
inline std::optional<std::vector<int>> leaf_order(const CliqueComplex& cc) {
  if (cc.facet_count() > 64) throw std::invalid_argument("too many facets for leaf-order search");
  std::vector<int> chosen;
  std::unordered_set<std::uint64_t> dead;
  std::uint64_t all = cc.facet_count() == 64 ? ~0ull : ((1ull << cc.facet_count()) - 1);
  if (detail::leaf_order_search(cc.facets, chosen, all, dead)) return chosen;
  return std::nullopt;
}

namespace detail {

// Chain condition: a leaf order where each facet's unique branch is its
// immediate predecessor.
inline bool chain_step_ok(const std::vector<VertexMask>& facets, const std::vector<int>& chosen,
                          int f) {
  if (chosen.empty()) return true;
  std::vector<int> branches;
  for (int gi : chosen) {
    VertexMask gf = facets[gi] & facets[f];
    bool branch = true;
    for (int hi : chosen)
      if ((facets[hi] & facets[f] & ~gf) != 0) {
        branch = false;
        break;
      }
    if (branch) branches.push_back(gi);
  }
  return branches.size() == 1 && branches[0] == chosen.back();
}

inline bool chain_search(const std::vector<VertexMask>& facets, std::vector<int>& chosen,
                         std::uint64_t remaining, std::unordered_set<std::uint64_t>& dead) {
  if (!remaining) return true;
  // Dead-state memo must account for the predecessor constraint, so key on
  // remaining set plus last choice (disjoint bit ranges, facet count <= 56).
  std::uint64_t key = (remaining << 7) | (chosen.empty() ? 127ull : (std::uint64_t)chosen.back());
  if (dead.count(key)) return false;
  for (std::uint64_t m = remaining; m; m &= m - 1) {
    int f = lowest_bit(m);
    if (!chain_step_ok(facets, chosen, f)) continue;
    chosen.push_back(f);
    if (chain_search(facets, chosen, remaining & ~(1ull << f), dead)) return true;
    chosen.pop_back();
  }
  dead.insert(key);
  return false;
}

}  // namespace detail

// A chain of cliques: a leaf order F_1..F_r in which F_{i-1} is the *unique*
// branch of F_i for every i >= 2.  Returns such an order if one exists.
inline std::optional<std::vector<int>> chain_of_cliques(const CliqueComplex& cc) {
  if (cc.facet_count() > 56) throw std::invalid_argument("too many facets for chain search");
  std::vector<int> chosen;
  std::unordered_set<std::uint64_t> dead;
  std::uint64_t all = (1ull << cc.facet_count()) - 1;
  if (detail::chain_search(cc.facets, chosen, all, dead)) return chosen;
  return std::nullopt;
}

}  // namespace bei

#endif
