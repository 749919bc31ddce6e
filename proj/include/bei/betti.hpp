#ifndef BEI_BETTI_HPP
#define BEI_BETTI_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bei/cutsets.hpp"
#include "bei/gf.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/hilbert.hpp"
#include "bei/resolution.hpp"

namespace bei {

// Graded Betti numbers of an ideal (not the quotient): entry (i, j) is
// β_{i,j}(I) = β_{i+1,j}(S/I).  pd_quotient and depth refer to S/I via
// depth = nvars - pd (Auslander–Buchsbaum).
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> β_{i,j}(I), zero omitted
  int pd_quotient = 0;
  int depth = 0;
  std::uint32_t prime = 0;
  int cap = 0;        // largest internal degree certified
  bool verified = false;
  std::string diagnostic;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int max_homological() const {
    int m = -1;
    for (const auto& [k, v] : entries) m = std::max(m, k.first);
    return m;
  }
  long long total(int i) const {
    long long t = 0;
    for (const auto& [k, v] : entries)
      if (k.first == i) t += v;
    return t;
  }
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// β_{i,j}(S/I) from the resolution: tensor down to the residue field (keep
// only the constant entries of each map) and take ranks degree by degree.
inline BettiTable betti_from_resolution(const PolyRing& ring, const Resolution& res, int cap) {
  const GF& gf = ring.gf;
  const int levels = (int)res.maps.size() - 1;  // maps 1..levels

  int max_degree = 0;
  for (int l = 1; l <= levels; ++l)
    for (int d : res.modules[l].degree) max_degree = std::max(max_degree, d);
  if (cap <= 0) cap = max_degree + 2;

  // basis indices per (level, degree)
  auto slot = [&](int level, int j) {
    std::vector<int> idx;
    if (level == 0) {
      if (j == 0) idx.push_back(0);
      return idx;
    }
    if (level > levels) return idx;
    for (int a = 0; a < res.modules[level].size(); ++a)
      if (res.modules[level].degree[a] == j) idx.push_back(a);
    return idx;
  };

  // rank of the constant strand of maps[level] at degree j
  auto strand_rank = [&](int level, int j) -> int {
    if (level < 1 || level > levels) return 0;
    std::vector<int> cols = slot(level, j);
    std::vector<int> rows = slot(level - 1, j);
    if (cols.empty() || rows.empty()) return 0;
    std::vector<int> row_of(res.modules[level - 1].size() + 1, -1);
    if (level == 1) {
      row_of[0] = 0;
    } else {
      for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = (int)r;
    }
    std::vector<std::vector<std::uint32_t>> m(rows.size(),
                                              std::vector<std::uint32_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const ModTerm& tm : res.maps[level][cols[c]])
        if (tm.m.is_one()) {
          int r = row_of[tm.comp];
          if (r >= 0) m[r][c] = gf.add(m[r][c], tm.c);
        }
    return gf_rank(m, gf);
  };

  BettiTable out;
  out.prime = gf.p;
  out.cap = cap;
  // Homological degrees above nvars carry no Tor; the resolution's
  // non-minimal tail may be truncated there, so never read it.
  const int top = std::min(levels, ring.nvars());
  for (int j = 0; j <= cap; ++j) {
    std::vector<int> ranks(levels + 2, 0);
    for (int l = 1; l <= std::min(levels, top + 1); ++l) ranks[l] = strand_rank(l, j);
    for (int i = 0; i <= top; ++i) {
      long long dim = (long long)slot(i, j).size();
      long long beta = dim - ranks[i] - ranks[i + 1];
      if (beta < 0) throw std::logic_error("negative Betti number: rank bookkeeping broken");
      // store ideal-indexed entries: β_{i,j}(I) = β_{i+1,j}(S/I)
      if (beta > 0 && i >= 1) out.entries[{i - 1, j}] = beta;
      if (beta > 0 && i > out.pd_quotient) out.pd_quotient = i;
    }
  }
  out.depth = ring.nvars() - out.pd_quotient;
  return out;
}

// Betti table of the ideal generated by `gens`.  Internally: reduced Gröbner
// basis, Schreyer resolution, constant-strand ranks; then the alternating
// column sums are checked against the K-polynomial of the initial ideal
// (equal Hilbert functions), which certifies the table at every degree.
inline BettiTable betti_table(const PolyRing& ring, const std::vector<Polynomial>& gens,
                              int cap = 0) {
  for (const Polynomial& g : gens)
    if (!g.is_zero() && !g.is_homogeneous())
      throw std::invalid_argument("betti_table needs homogeneous generators");
  GroebnerBasis gb = buchberger(ring, gens);
  Resolution res = schreyer_resolution(ring, gb.basis);
  int max_degree = 0;
  for (std::size_t l = 1; l < res.modules.size(); ++l)
    for (int d : res.modules[l].degree) max_degree = std::max(max_degree, d);

  BettiTable out = betti_from_resolution(ring, res, 0);
  std::vector<long long> kpoly = hilbert_numerator(initial_ideal(gb));

  bool ok = true;
  std::ostringstream diag;
  int span = std::max(max_degree, (int)kpoly.size() - 1);
  for (int j = 0; j <= span && ok; ++j) {
    long long alt = (j == 0) ? 1 : 0;  // β_{0,0}(S/I) contribution
    for (const auto& [key, v] : out.entries)
      if (key.second == j) alt += ((key.first + 1) % 2 == 0) ? v : -v;
    long long expect = (j < (int)kpoly.size()) ? kpoly[j] : 0;
    if (alt != expect) {
      ok = false;
      diag << "alternating sum at degree " << j << " is " << alt << ", K-polynomial says "
           << expect;
    }
  }
  if (cap > 0 && cap < max_degree) {
    out.verified = false;
    out.cap = cap;
    out.diagnostic = "cap " + std::to_string(cap) + " below resolution degree range (max " +
                     std::to_string(max_degree) + ")";
    std::erase_if(out.entries, [&](const auto& kv) { return kv.first.second > cap; });
    return out;
  }
  out.verified = ok;
  if (!ok) out.diagnostic = diag.str();
  return out;
}

struct DepthResult {
  int depth = 0;
  int dim = 0;
  bool cm = false;
  bool verified = false;
  BettiTable table;
};

// Engine route to depth and the CM property: depth from the resolution,
// dimension from the minimal primes.
inline DepthResult depth_and_cm(const Graph& g, std::uint32_t p, int cap = 0) {
  PolyRing ring(g.n(), p);
  DepthResult out;
  out.table = betti_table(ring, binomial_edge_ideal(ring, g), cap);
  out.depth = out.table.depth;
  out.dim = cut_sets(g).krull_dim;
  out.cm = (out.depth == out.dim);
  out.verified = out.table.verified;
  return out;
}

// Aligned text rendering, rows indexed by j - i (regularity strands).
inline std::string format_betti(const BettiTable& t) {
  if (t.entries.empty()) return "(zero ideal: no Betti table)\n";
  int max_i = 0, min_shift = 1 << 20, max_shift = 0;
  for (const auto& [k, v] : t.entries) {
    max_i = std::max(max_i, k.first);
    min_shift = std::min(min_shift, k.second - k.first);
    max_shift = std::max(max_shift, k.second - k.first);
  }
  std::vector<std::vector<std::string>> cells(max_shift - min_shift + 2,
                                              std::vector<std::string>(max_i + 2));
  cells[0][0] = "total:";
  for (int s = min_shift; s <= max_shift; ++s) cells[s - min_shift + 1][0] = std::to_string(s) + ":";
  for (int i = 0; i <= max_i; ++i) {
    cells[0][i + 1] = std::to_string(t.total(i));
    for (int s = min_shift; s <= max_shift; ++s) {
      long long v = t.at(i, i + s);
      cells[s - min_shift + 1][i + 1] = v ? std::to_string(v) : ".";
    }
  }
  std::vector<std::size_t> width(max_i + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::string(width[c] - row[c].size(), ' ') << row[c] << (c + 1 < row.size() ? "  " : "");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bei

#endif
