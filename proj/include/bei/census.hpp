#ifndef BEI_CENSUS_HPP
#define BEI_CENSUS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bei/classify.hpp"
#include "bei/engine.hpp"
#include "bei/report.hpp"

namespace bei {

// ---------------------------------------------------------------------------
// Isomorphism signatures via colour refinement.
//
// Seed colour of a vertex: (degree, triangles through it, sorted distance
// profile).  Each round replaces a vertex's colour by (old colour, sorted
// neighbour colours) and renumbers the distinct colours canonically, so the
// stable colouring depends only on the isomorphism type.  The descriptor
// packs the class sizes, each class's seed data and the class-to-class
// adjacency counts.  Isomorphic graphs always get equal descriptors; that
// distinct descriptors separate every pair we enumerate is pinned by tests
// against the known counts of isomorphism classes.
inline std::string graph_signature(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw std::invalid_argument("signature supports n <= 16");

  std::vector<std::vector<int>> seed(n);
  for (int v = 0; v < n; ++v) {
    int tri = 0;
    for (VertexMask m = g.adjacency(v); m; m &= m - 1)
      tri += popcount(g.adjacency(lowest_bit(m)) & g.adjacency(v));
    tri /= 2;
    std::vector<int> dist(n, n);  // n stands for "unreachable"
    dist[v] = 0;
    VertexMask seen = 1ull << v, frontier = seen;
    for (int d = 1; frontier; ++d) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.adjacency(lowest_bit(m));
      next &= ~seen;
      for (VertexMask m = next; m; m &= m - 1) dist[lowest_bit(m)] = d;
      seen |= next;
      frontier = next;
    }
    std::sort(dist.begin(), dist.end());
    seed[v] = {g.degree(v), tri};
    seed[v].insert(seed[v].end(), dist.begin(), dist.end());
  }

  auto renumber = [n](const std::vector<std::vector<int>>& desc, std::vector<int>& color) {
    std::vector<std::vector<int>> sorted = desc;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = (int)(std::lower_bound(sorted.begin(), sorted.end(), desc[v]) - sorted.begin());
    return (int)sorted.size();
  };

  std::vector<int> color(n);
  int classes = renumber(seed, color);
  while (true) {
    std::vector<std::vector<int>> desc(n);
    for (int v = 0; v < n; ++v) {
      desc[v].push_back(color[v]);
      std::vector<int> nb;
      for (VertexMask m = g.adjacency(v); m; m &= m - 1) nb.push_back(color[lowest_bit(m)]);
      std::sort(nb.begin(), nb.end());
      desc[v].insert(desc[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> next(n);
    int next_classes = renumber(desc, next);
    if (next_classes == classes) break;  // no class split: the partition is stable
    color = std::move(next);
    classes = next_classes;
  }

  // Descriptor bytes: n, m, #classes, then per class (in colour order) its
  // size, its seed vector and its row of class-to-class neighbour counts.
  std::string sig;
  sig.push_back((char)n);
  sig.push_back((char)g.edge_count());
  sig.push_back((char)classes);
  for (int c = 0; c < classes; ++c) {
    int rep = -1, size = 0;
    for (int v = 0; v < n; ++v)
      if (color[v] == c) {
        if (rep < 0) rep = v;
        ++size;
      }
    sig.push_back((char)size);
    for (int x : seed[rep]) sig.push_back((char)x);
    for (int d = 0; d < classes; ++d) {
      int cnt = 0;
      for (VertexMask m = g.adjacency(rep); m; m &= m - 1)
        if (color[lowest_bit(m)] == d) ++cnt;
      sig.push_back((char)cnt);
    }
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration by edge subsets of the complete graph, one
// representative per signature, in first-seen order.

inline std::vector<std::pair<int, int>> complete_edge_list(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return edges;
}

inline Graph graph_from_bits(int n, const std::vector<std::pair<int, int>>& all,
                             std::uint64_t bits) {
  std::vector<VertexMask> adj(n, 0);
  for (std::uint64_t m = bits; m; m &= m - 1) {
    auto [a, b] = all[lowest_bit(m)];
    adj[a - 1] |= 1ull << (b - 1);
    adj[b - 1] |= 1ull << (a - 1);
  }
  return Graph::from_masks(n, std::move(adj));
}

enum class GraphFilter { all, connected, forest };

// Graphs on exactly n vertices (isolated vertices allowed unless connected).
inline std::vector<Graph> enumerate_graphs(int n, GraphFilter filter) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports n in 1..7");
  const auto all = complete_edge_list(n);
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  const std::uint64_t limit = 1ull << all.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Graph g = graph_from_bits(n, all, bits);
    if (filter == GraphFilter::connected && !is_connected(g)) continue;
    if (filter == GraphFilter::forest && !is_forest(g)) continue;
    if (seen.insert(graph_signature(g)).second) out.push_back(g);
  }
  return out;
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
  return enumerate_graphs(n, GraphFilter::connected);
}

inline std::vector<Graph> enumerate_forests(int n) {
  return enumerate_graphs(n, GraphFilter::forest);
}

// ---------------------------------------------------------------------------
// Census: every connected graph up to max_n, all classifiers, optionally the
// engine, one JSON line per graph plus agreement verdicts.

struct CensusRecord {
  int n = 0;
  std::uint64_t index = 0;  // position in the deterministic enumeration
  std::string edges;
  std::string cls;
  bool chordal = false;
  bool forest = false;
  bool closed = false;
  bool special_chordal = false;
  bool chain = false;
  int dim = 0;
  bool unmixed = false;
  long long prime_multiplicity_sum = 0;  // over minimal primes of top dimension
  std::optional<int> theorem_depth;
  std::optional<bool> theorem_cm;
  bool engine_ran = false;
  std::optional<int> engine_depth;
  std::optional<bool> engine_cm;
  std::optional<bool> engine_cm_initial;
  std::optional<long long> engine_multiplicity;
  std::vector<std::string> checks_failed;  // empty = full agreement
};

inline Json to_json(const CensusRecord& r) {
  Json j;
  j["n"] = r.n;
  j["index"] = r.index;
  j["edges"] = r.edges;
  j["class"] = r.cls;
  j["chordal"] = r.chordal;
  j["forest"] = r.forest;
  j["closed"] = r.closed;
  j["special_chordal"] = r.special_chordal;
  j["chain_of_cliques"] = r.chain;
  j["dim"] = r.dim;
  j["unmixed"] = r.unmixed;
  j["prime_multiplicity_sum"] = r.prime_multiplicity_sum;
  if (r.theorem_depth) j["theorem_depth"] = *r.theorem_depth;
  if (r.theorem_cm) j["theorem_cm"] = *r.theorem_cm;
  j["engine_ran"] = r.engine_ran;
  if (r.engine_depth) j["engine_depth"] = *r.engine_depth;
  if (r.engine_cm) j["engine_cm"] = *r.engine_cm;
  if (r.engine_cm_initial) j["engine_cm_initial"] = *r.engine_cm_initial;
  if (r.engine_multiplicity) j["engine_multiplicity"] = *r.engine_multiplicity;
  j["agree"] = r.checks_failed.empty();
  if (!r.checks_failed.empty()) j["checks_failed"] = r.checks_failed;
  return j;
}

// Runs every applicable classifier (and, when asked, the engine) on one graph
// and cross-checks everything that can be cross-checked.  Any failed check is
// named in checks_failed; an entry there is a bug or a discovery, never
// dropped.
inline CensusRecord census_evaluate(const Graph& g, std::uint64_t index, std::uint32_t p,
                                    bool engine) {
  CensusRecord r;
  r.n = g.n();
  r.index = index;
  r.edges = to_text(g);
  r.chordal = is_chordal(g).has_value();
  r.forest = is_forest(g);
  r.chain = chain_of_cliques(clique_complex(g)).has_value();
  r.closed = is_closed(g);
  const bool connected = is_connected(g);
  const int c = component_count(g, g.all_vertices());

  PrimeDecomposition primes = cut_sets(g);
  r.dim = primes.krull_dim;
  r.unmixed = primes.unmixed;
  for (const auto& rec : primes.minimal_primes)
    if (2 * g.n() - rec.height == r.dim) r.prime_multiplicity_sum += rec.multiplicity;

  std::optional<ClassificationReport> special = classify_special_chordal(g);
  r.special_chordal = special.has_value();
  ClosedConditionFlags flags;
  std::optional<ClassificationReport> closed_rep;
  if (r.closed) closed_rep = classify_closed(g, &flags);

  r.cls = r.forest                ? "forest"
          : r.closed              ? "closed"
          : r.special_chordal     ? "special-chordal"
                                  : "outside";

  auto fail = [&](const char* what) { r.checks_failed.push_back(what); };

  if (r.forest && !r.special_chordal) fail("forest-implies-special-chordal");
  if (connected && r.closed && !r.chain) fail("closed-implies-chain");

  if (special) {
    r.theorem_depth = special->depth;
    r.theorem_cm = special->cm;
    if (special->depth != g.n() + c) fail("special-chordal-depth-formula");
  }
  if (r.forest) {
    ClassificationReport forest_rep = classify_forest(g);
    if (forest_rep.depth != g.n() + c) fail("forest-depth-formula");
    if (special && forest_rep.cm != special->cm) fail("forest-vs-special-cm");
    r.theorem_depth = forest_rep.depth;
    r.theorem_cm = forest_rep.cm;
  }
  if (connected && r.closed) {
    // Combinatorial legs of the closed-graph equivalence: unmixedness, the
    // edge-implication condition, and the interval-chain structure must all
    // agree even before the engine looks at the ideal.
    if (flags.unmixed != flags.edge_condition || flags.unmixed != flags.interval_chain)
      fail("closed-equivalence-combinatorial");
    if (closed_rep && closed_rep->cm && *closed_rep->cm != r.unmixed) fail("closed-cm-vs-unmixed");
    if (flags.interval_chain && flags.unmixed) {
      r.theorem_depth = g.n() + 1;
      r.theorem_cm = true;
    }
    if (!flags.unmixed) r.theorem_cm = false;
  }

  if (engine) {
    r.engine_ran = true;
    PolyRing ring(g.n(), p);
    std::vector<Polynomial> gens = binomial_edge_ideal(ring, g);
    BettiTable table = betti_table(ring, gens);
    if (!table.verified) fail("engine-unverified");
    r.engine_depth = table.depth;
    r.engine_cm = (table.depth == r.dim);

    GroebnerBasis gb = buchberger(ring, gens);
    std::vector<Monomial> ini = initial_ideal(gb);
    if (!ini.empty()) {
      // Dimension and multiplicity of the quotient can be read off the
      // initial ideal in any vertex order, so these stay on the input order.
      HilbertSeries hs = hilbert_series_monomial(ring, ini);
      r.engine_multiplicity = hs.multiplicity;
      if (hs.dimension != r.dim) fail("initial-ideal-dimension");
      if (hs.multiplicity != r.prime_multiplicity_sum) fail("multiplicity-associativity");

      std::vector<Polynomial> ini_polys;
      for (const Monomial& m : ini) ini_polys.push_back(Polynomial{{Term{m, 1}}});
      BettiTable ini_table = betti_table(ring, ini_polys);
      if (!ini_table.verified) fail("engine-unverified-initial");
      r.engine_cm_initial = (ini_table.depth == hs.dimension);
    } else {
      r.engine_multiplicity = 1;  // zero ideal: the quotient is the ring itself
      r.engine_cm_initial = true;
    }

    // Everything stated for closed graphs presumes the order that witnesses
    // closedness, so those comparisons run on the relabeled graph.  The
    // ideal's own Betti table must not change under relabeling; that is
    // checked rather than assumed.
    if (connected && r.closed && g.n() >= 2) {
      Graph h = find_closed_labeling(g)->apply(g);
      std::vector<Polynomial> gens_h = binomial_edge_ideal(ring, h);
      BettiTable table_h = betti_table(ring, gens_h);
      if (!table_h.verified) fail("engine-unverified-relabel");
      if (table_h.entries != table.entries) fail("betti-relabel-invariance");

      GroebnerBasis gb_h = buchberger(ring, gens_h);
      std::vector<Polynomial> ini_h;
      for (const Monomial& m : initial_ideal(gb_h)) ini_h.push_back(Polynomial{{Term{m, 1}}});
      HilbertSeries hs_h = hilbert_series_monomial(ring, initial_ideal(gb_h));
      BettiTable ini_table_h = betti_table(ring, ini_h);
      if (!ini_table_h.verified) fail("engine-unverified-initial");
      r.engine_cm_initial = (ini_table_h.depth == hs_h.dimension);

      // All five conditions of the closed-graph equivalence.
      bool a = r.unmixed, b = *r.engine_cm, c2 = *r.engine_cm_initial;
      bool d = flags.edge_condition, e = flags.interval_chain;
      if (a != b || a != c2 || a != d || a != e) fail("closed-equivalence-engine");
      if (a && table_h.entries != ini_table_h.entries) fail("betti-initial-equality");
      if (a && closed_rep && closed_rep->cm_type) {
        int last = table_h.max_homological();
        if (table_h.total(last) != *closed_rep->cm_type) fail("cm-type");
      }
      if (a && closed_rep && !closed_rep->hilbert_numerator.empty()) {
        if (hs_h.reduced_numerator != closed_rep->hilbert_numerator) fail("hilbert-closed-form");
        if (closed_rep->multiplicity && hs_h.multiplicity != *closed_rep->multiplicity)
          fail("multiplicity-closed-form");
      }
    }
    if (r.theorem_depth && *r.engine_depth != *r.theorem_depth) fail("depth-formula");
    if (r.theorem_cm && *r.engine_cm != *r.theorem_cm) fail("cm-rule");
    if (*r.engine_cm && !r.unmixed) fail("cm-implies-unmixed");
  }
  return r;
}

enum class EngineMode { off, on, automatic };

struct CensusSummary {
  long long graphs = 0;
  long long engine_runs = 0;
  long long disagreements = 0;
  bool truncated = false;
};

// Streams one JSON line per graph, ordered by (n, enumeration index), then a
// summary line.  `limit` > 0 caps the number of records; hitting the cap
// emits an explicit truncation marker.  Exit-code policy belongs to callers.
inline CensusSummary run_census(int max_n, std::uint32_t p, EngineMode mode, long long limit,
                                std::ostream& out) {
  if (max_n < 1 || max_n > 7) throw std::invalid_argument("census supports max-n in 1..7");
  if (mode == EngineMode::on && max_n > 6)
    throw std::invalid_argument("census with the engine forced on supports max-n up to 6");
  CensusSummary sum;
  for (int n = 1; n <= max_n && !sum.truncated; ++n) {
    const bool engine = mode == EngineMode::on || (mode == EngineMode::automatic && n <= 6);
    std::uint64_t index = 0;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (limit > 0 && sum.graphs >= limit) {
        sum.truncated = true;
        break;
      }
      CensusRecord rec = census_evaluate(g, index++, p, engine);
      ++sum.graphs;
      if (rec.engine_ran) ++sum.engine_runs;
      if (!rec.checks_failed.empty()) ++sum.disagreements;
      out << to_json(rec).dump() << "\n";
    }
  }
  Json tail;
  if (sum.truncated) tail["truncated"] = true;
  tail["graphs"] = sum.graphs;
  tail["engine_runs"] = sum.engine_runs;
  tail["disagreements"] = sum.disagreements;
  out << tail.dump() << "\n";
  return sum;
}

}  // namespace bei

#endif
