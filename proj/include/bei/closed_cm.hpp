#ifndef BEI_CLOSED_CM_HPP
#define BEI_CLOSED_CM_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bei/cliques.hpp"
#include "bei/closed.hpp"
#include "bei/graph.hpp"

namespace bei {

// The structure of a connected closed graph with Cohen–Macaulay edge ideal:
// under a suitable labeling its maximal cliques are the label intervals
// [a_1, a_2], ..., [a_r, a_{r+1}] with 1 = a_1 < a_2 < ... < a_{r+1} = n,
// consecutive cliques overlapping in exactly one vertex.  The i-th clique has
// k_i = a_{i+1} - a_i + 1 vertices.
struct ClosedCMStructure {
  int n = 0;
  std::vector<int> breakpoints;  // a_1 .. a_{r+1}; for n = 1 just {1}

  ClosedCMStructure(int vertices, std::vector<int> bps) : n(vertices), breakpoints(std::move(bps)) {
    if (n < 1) throw std::invalid_argument("structure needs at least one vertex");
    if (n == 1) {
      if (breakpoints != std::vector<int>{1}) throw std::invalid_argument("single vertex has breakpoints {1}");
      return;
    }
    if (breakpoints.size() < 2 || breakpoints.front() != 1 || breakpoints.back() != n)
      throw std::invalid_argument("breakpoints must run from 1 to n");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (breakpoints[i] <= breakpoints[i - 1])
        throw std::invalid_argument("breakpoints must be strictly increasing");
  }

  int clique_count() const { return n == 1 ? 0 : (int)breakpoints.size() - 1; }

  std::vector<int> clique_sizes() const {
    std::vector<int> k;
    for (int i = 0; i + 1 < (int)breakpoints.size(); ++i)
      k.push_back(breakpoints[i + 1] - breakpoints[i] + 1);
    return k;
  }

  // The graph realizing the structure: each interval is a clique.
  Graph realize() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < (int)breakpoints.size(); ++i)
      for (int a = breakpoints[i]; a <= breakpoints[i + 1]; ++a)
        for (int b = a + 1; b <= breakpoints[i + 1]; ++b) edges.emplace_back(a, b);
    return Graph(n, edges);
  }
};

// Reads the interval structure off a connected closed graph: facets of the
// relabeled graph must be intervals [a_i, a_{i+1}] chaining across the whole
// vertex range with single-vertex overlaps.  Returns nullopt when the facets
// do not chain that way (then the ideal is not Cohen–Macaulay).
inline std::optional<ClosedCMStructure> extract_closed_cm_structure(const Graph& g,
                                                                    const Labeling& lab) {
  if (!is_closed_wrt(g, lab)) return std::nullopt;
  const Graph h = lab.apply(g);
  if (h.n() == 1) return ClosedCMStructure(1, {1});
  CliqueComplex cc = clique_complex(h);
  std::vector<std::pair<int, int>> intervals;  // (min, max), 1-based
  for (VertexMask f : cc.facets) {
    int lo = lowest_bit(f), hi = 63 - std::countl_zero(f);
    if (popcount(f) != hi - lo + 1) return std::nullopt;  // not consecutive
    intervals.emplace_back(lo + 1, hi + 1);
  }
  std::sort(intervals.begin(), intervals.end());
  if (intervals.front().first != 1 || intervals.back().second != h.n()) return std::nullopt;
  std::vector<int> bps{1};
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i + 1 < intervals.size() && intervals[i + 1].first != intervals[i].second)
      return std::nullopt;  // must overlap in exactly the shared breakpoint
    bps.push_back(intervals[i].second);
  }
  return ClosedCMStructure(h.n(), std::move(bps));
}

// A structural prime of such a graph: the cut set is a set of interior
// breakpoints, no two consecutive.
struct StructuralPrime {
  std::vector<int> s;  // breakpoint labels a_{j}, 1-based in the relabeled graph
  long long multiplicity = 0;
};

// Lists the minimal primes of the edge ideal of a CM closed structure without
// touching the graph: cut sets are the subsets {a_{j_1} < ... < a_{j_s}} of
// interior breakpoints (2 <= j_1, j_s <= r) with consecutive chosen
// breakpoints at least two apart, and the quotient multiplicity is the
// product of the segment lengths the chosen breakpoints cut the interval
// [1, n] into: (a_{j_1} - 1)(a_{j_2} - a_{j_1} - 1) ... (n - a_{j_s}).
inline std::vector<StructuralPrime> cm_closed_primes(const ClosedCMStructure& st) {
  const auto& a = st.breakpoints;
  const int r = st.clique_count();
  std::vector<StructuralPrime> out;
  // indices of interior breakpoints are 2..r in 1-based math notation,
  // i.e. a[1]..a[r-1] in 0-based array positions.
  std::vector<int> chosen;
  auto emit = [&]() {
    StructuralPrime sp;
    sp.multiplicity = 1;
    int prev = 0;  // a_{j_0} reads as 1, segment length a_{j_1} - 1
    for (int pos : chosen) {
      sp.s.push_back(a[pos]);
      sp.multiplicity *= a[pos] - (prev == 0 ? 1 : a[prev]) - (prev == 0 ? 0 : 1);
      prev = pos;
    }
    sp.multiplicity *= (prev == 0 ? st.n : st.n - a[prev]);
    out.push_back(std::move(sp));
  };
  // backtracking over 0-based positions 1..r-1 with gap: next chosen
  // breakpoint value must exceed previous + 1.
  auto rec = [&](auto&& self, int from) -> void {
    emit();
    for (int pos = from; pos <= r - 1; ++pos) {
      if (!chosen.empty() && a[pos] < a[chosen.back()] + 2) continue;
      chosen.push_back(pos);
      self(self, pos + 1);
      chosen.pop_back();
    }
  };
  if (r >= 1) rec(rec, 1);
  else out.push_back({{}, 1});  // single vertex: only the empty cut set
  // Canonical order: by size, then lexicographically — the same order the
  // cut-set enumeration reports, so the two lists compare element-wise.
  std::sort(out.begin(), out.end(), [](const StructuralPrime& a, const StructuralPrime& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    return a.s < b.s;
  });
  return out;
}

// Degree of the quotient by the edge ideal, computed by summing the
// multiplicities of all minimal primes (they share the same dimension in the
// Cohen–Macaulay closed case).  Equals k_1 * k_2 * ... * k_r.
inline long long multiplicity_via_associativity(const ClosedCMStructure& st) {
  long long total = 0;
  for (const auto& sp : cm_closed_primes(st)) total += sp.multiplicity;
  return total;
}

}  // namespace bei

#endif
