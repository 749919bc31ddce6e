#ifndef BEI_CUTSETS_HPP
#define BEI_CUTSETS_HPP

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// One minimal prime of the edge ideal, indexed by its cut set S.
// height = n + |S| - c(S) where c(S) counts components of G minus S;
// multiplicity is the product of the component orders of G minus S.
struct CutSetRecord {
  std::vector<int> s;  // 1-based, sorted
  int c = 0;
  int height = 0;
  long long multiplicity = 0;
};

struct PrimeDecomposition {
  std::vector<CutSetRecord> minimal_primes;  // sorted by (|S|, S)
  int krull_dim = 0;                         // of the quotient by the edge ideal
  bool unmixed = false;
};

namespace detail {

inline bool is_simplicial(const Graph& g, int v) { return g.is_clique(g.adjacency(v)); }

struct ComponentCounter {
  const Graph& g;
  std::unordered_map<VertexMask, int> memo;
  int operator()(VertexMask removed) {
    auto it = memo.find(removed);
    if (it != memo.end()) return it->second;
    int c = component_count(g, g.all_vertices() & ~removed);
    memo.emplace(removed, c);
    return c;
  }
};

}  // namespace detail

// Enumerates the cut sets S whose prime P_S is minimal over the edge ideal:
// S is empty, or removing any single vertex of S strictly drops the component
// count.  Candidate vertices are the non-simplicial ones — removing a
// simplicial vertex never disconnects anything, so no minimal cut set
// contains one.  (The test suite checks this pruning against the unrestricted
// 2^n enumeration.)
inline PrimeDecomposition cut_sets(const Graph& g) {
  const int n = g.n();
  VertexMask candidates = 0;
  for (int v = 0; v < n; ++v)
    if (!detail::is_simplicial(g, v)) candidates |= 1ull << v;
  if (popcount(candidates) > 24)
    throw std::invalid_argument("cut-set enumeration limited to 24 non-simplicial vertices");

  detail::ComponentCounter comps{g, {}};
  PrimeDecomposition out;

  std::vector<int> cand;
  for (VertexMask m = candidates; m; m &= m - 1) cand.push_back(lowest_bit(m));
  const std::uint64_t limit = 1ull << cand.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    VertexMask s = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if ((bits >> i) & 1) s |= 1ull << cand[i];
    int c = comps(s);
    bool minimal = true;
    for (VertexMask m = s; minimal && m; m &= m - 1)
      if (comps(s & ~(1ull << lowest_bit(m))) >= c) minimal = false;
    if (!minimal) continue;

    CutSetRecord rec;
    for (VertexMask m = s; m; m &= m - 1) rec.s.push_back(lowest_bit(m) + 1);
    rec.c = c;
    rec.height = n + popcount(s) - c;
    rec.multiplicity = 1;
    for (VertexMask comp : connected_components(g, g.all_vertices() & ~s))
      rec.multiplicity *= popcount(comp);
    out.minimal_primes.push_back(std::move(rec));
  }

  std::sort(out.minimal_primes.begin(), out.minimal_primes.end(),
            [](const CutSetRecord& a, const CutSetRecord& b) {
              if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
              return a.s < b.s;
            });
  int min_height = out.minimal_primes.front().height;
  int max_height = min_height;
  for (const auto& rec : out.minimal_primes) {
    min_height = std::min(min_height, rec.height);
    max_height = std::max(max_height, rec.height);
  }
  out.krull_dim = 2 * n - min_height;
  out.unmixed = (min_height == max_height);
  return out;
}

}  // namespace bei

#endif
