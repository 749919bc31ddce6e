#ifndef BEI_CLASSIFY_HPP
#define BEI_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/cliques.hpp"
#include "bei/closed.hpp"
#include "bei/closed_cm.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

namespace bei {

enum class GraphClass { special_chordal, forest, closed, outside };

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::special_chordal: return "special-chordal";
    case GraphClass::forest: return "forest";
    case GraphClass::closed: return "closed";
    default: return "outside";
  }
}

// What the combinatorial theorems can say about a graph's edge ideal without
// running the algebra engine.  Absent optionals mean "not determined by this
// classifier".
struct ClassificationReport {
  GraphClass class_tag = GraphClass::outside;
  int n = 0;
  int components = 0;
  std::optional<int> depth;
  std::optional<int> dim;
  std::optional<bool> unmixed;
  std::optional<bool> cm;
  std::optional<bool> complete_intersection;
  std::optional<bool> gorenstein;
  std::vector<long long> hilbert_numerator;  // reduced; empty = not computed
  std::optional<long long> multiplicity;
  std::optional<int> a_invariant;
  std::optional<long long> cm_type;
  // For complete-intersection forests: the initial-ideal generators in the
  // path labeling, "x1*y2", "x2*y3", ...
  std::vector<std::string> initial_ideal;
  std::vector<std::string> explain;
};

// ---- chordal graphs whose maximal cliques pairwise meet in at most one
// ---- vertex: depth is n + c, and CM is equivalent to every vertex lying in
// ---- at most two maximal cliques.

inline std::optional<ClassificationReport> classify_special_chordal(const Graph& g) {
  ClassificationReport rep;
  rep.n = g.n();
  rep.components = component_count(g, g.all_vertices());
  auto peo = is_chordal(g);
  if (!peo) {
    rep.explain.push_back("not chordal");
    return std::nullopt;
  }
  CliqueComplex cc = clique_complex(g);
  if (!clique_intersections_at_most_one(cc)) {
    rep.explain.push_back("two maximal cliques share more than one vertex");
    return std::nullopt;
  }
  rep.class_tag = GraphClass::special_chordal;
  rep.depth = rep.n + rep.components;

  PrimeDecomposition primes = cut_sets(g);
  rep.dim = primes.krull_dim;
  rep.unmixed = primes.unmixed;

  bool every_vertex_in_two = true;
  for (int cnt : facet_membership_counts(cc))
    if (cnt > 2) every_vertex_in_two = false;
  rep.cm = every_vertex_in_two;
  rep.explain.push_back(std::string("depth = n + c = ") + std::to_string(*rep.depth));
  rep.explain.push_back(every_vertex_in_two
                            ? "every vertex lies in at most two maximal cliques: Cohen-Macaulay"
                            : "some vertex lies in three or more maximal cliques: not Cohen-Macaulay");
  return rep;
}

// ---- forests (a special case of the above class) ----

inline bool is_path_component(const Graph& g, VertexMask comp) {
  int deg_one = 0;
  for (VertexMask m = comp; m; m &= m - 1) {
    int d = popcount(g.adjacency(lowest_bit(m)) & comp);
    if (d > 2) return false;
    if (d <= 1) ++deg_one;  // includes the single-vertex component
  }
  // acyclic + max degree 2 => disjoint paths; one component has 2 endpoints
  // (or is a single vertex).
  return deg_one <= 2;
}

inline ClassificationReport classify_forest(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("graph has a cycle");
  ClassificationReport rep;
  rep.n = g.n();
  rep.components = component_count(g, g.all_vertices());
  rep.class_tag = GraphClass::forest;
  rep.depth = rep.n + rep.components;

  PrimeDecomposition primes = cut_sets(g);
  rep.dim = primes.krull_dim;
  rep.unmixed = primes.unmixed;

  bool all_paths = true;
  for (VertexMask comp : connected_components(g))
    if (!is_path_component(g, comp)) all_paths = false;
  rep.cm = all_paths;
  rep.complete_intersection = all_paths;  // for forests these coincide
  if (all_paths) {
    // product over components of the path invariants: numerator (1+t)^(n_i-1)
    rep.hilbert_numerator.assign(1, 1);
    long long e = 1;
    for (VertexMask comp : connected_components(g)) {
      int ni = popcount(comp);
      for (int rep_i = 0; rep_i < ni - 1; ++rep_i) {
        rep.hilbert_numerator.push_back(0);
        for (std::size_t k = rep.hilbert_numerator.size() - 1; k > 0; --k)
          rep.hilbert_numerator[k] += rep.hilbert_numerator[k - 1];
      }
      e <<= (ni - 1);
    }
    rep.multiplicity = e;
    rep.a_invariant = (int)rep.hilbert_numerator.size() - 1 - (rep.n + rep.components);
    rep.cm_type = 1;
    rep.gorenstein = true;
    // In the path labeling every edge joins consecutive labels, and the
    // initial ideal is generated by x_a * y_{a+1} along each path.
    Labeling lab = *find_closed_labeling(g);
    for (auto [a, b] : lab.apply(g).edges()) {
      if (b != a + 1) throw std::logic_error("path labeling is not consecutive");
      rep.initial_ideal.push_back("x" + std::to_string(a) + "*y" + std::to_string(b));
    }
    rep.explain.push_back("every component is a path: complete intersection, Cohen-Macaulay");
  } else {
    rep.gorenstein = false;
    rep.explain.push_back("some component is not a path: not Cohen-Macaulay");
  }
  rep.explain.push_back(std::string("depth = n + c = ") + std::to_string(*rep.depth));
  return rep;
}

// ---- closed graphs: the five equivalent conditions ----

struct ClosedConditionFlags {
  bool unmixed = false;           // (a)
  bool edge_condition = false;    // (d): {i,j+1},{j,k+1} edges with i<j<k force {i,k+1}
  bool interval_chain = false;    // (e): facets chain as intervals with unit overlap
};

// Condition (d) on the relabeled graph.
inline bool closed_edge_condition(const Graph& h) {
  auto edges = h.edges();
  for (auto [i1, j1] : edges) {
    int i = i1, jp = j1;  // i < j+1, so j = jp - 1
    int j = jp - 1;
    if (i >= j) continue;
    for (auto [j2, k2] : edges) {
      if (j2 != j) continue;
      int k = k2 - 1;
      if (j >= k) continue;
      if (!h.has_edge(i - 1, k2 - 1)) return false;
    }
  }
  return true;
}

// Classifies a connected closed graph via its witnessing labeling.  For
// disconnected graphs the per-component structures are combined; CM forces
// connectedness except for the trivial single-component reading, so the
// combined flags follow the tensor-product rules.
inline std::optional<ClassificationReport> classify_closed(const Graph& g,
                                                           ClosedConditionFlags* flags_out = nullptr) {
  ClassificationReport rep;
  rep.n = g.n();
  rep.components = component_count(g, g.all_vertices());
  auto lab = find_closed_labeling(g);
  if (!lab) {
    rep.explain.push_back("no closed labeling exists");
    return std::nullopt;
  }
  rep.class_tag = GraphClass::closed;

  PrimeDecomposition primes = cut_sets(g);
  rep.dim = primes.krull_dim;
  rep.unmixed = primes.unmixed;

  const Graph h = lab->apply(g);
  ClosedConditionFlags flags;
  flags.unmixed = primes.unmixed;
  flags.edge_condition = closed_edge_condition(h);

  // per-component interval structures under the found labeling
  std::vector<ClosedCMStructure> structures;
  bool chain = true;
  for (VertexMask comp : connected_components(g)) {
    auto sub = restrict_to(g, comp);
    auto st = extract_closed_cm_structure(sub.graph, *find_closed_labeling(sub.graph));
    if (st) structures.push_back(*st);
    else chain = false;
  }
  flags.interval_chain = chain;
  if (flags_out) *flags_out = flags;

  rep.cm = chain && flags.unmixed;  // equivalent conditions; census re-checks equality
  if (chain) {
    // combined invariants: Hilbert numerators multiply, the rest follows
    rep.hilbert_numerator.assign(1, 1);
    long long e = 1, type = 1;
    bool gor = true;
    int numerator_deg = 0;
    for (const auto& st : structures) {
      for (int k : st.clique_sizes()) {
        // multiply numerator by (k-1)t + 1
        rep.hilbert_numerator.push_back(0);
        for (std::size_t q = rep.hilbert_numerator.size() - 1; q > 0; --q)
          rep.hilbert_numerator[q] += (k - 1) * rep.hilbert_numerator[q - 1];
        ++numerator_deg;
        e *= k;
        type *= k - 1;
        if (k != 2) gor = false;
      }
    }
    rep.multiplicity = e;
    rep.a_invariant = numerator_deg - (rep.n + rep.components);
    rep.cm_type = type;
    rep.gorenstein = gor;
    rep.complete_intersection = gor;  // all cliques are edges <=> path components
    rep.depth = rep.n + rep.components;  // CM: depth = dim = n + c
    rep.explain.push_back("facets chain as label intervals with single-vertex overlaps: Cohen-Macaulay");
  } else {
    rep.cm = false;
    rep.explain.push_back("facet intervals do not chain with single-vertex overlaps: not Cohen-Macaulay");
  }
  return rep;
}

// Invariants of a Cohen–Macaulay closed structure, straight from the clique
// sizes: reduced Hilbert numerator prod((k_i - 1)t + 1), dimension n + 1,
// multiplicity prod k_i, a-invariant r - (n + 1), type prod(k_i - 1).
inline ClassificationReport closed_cm_invariants(const ClosedCMStructure& st) {
  ClassificationReport rep;
  rep.class_tag = GraphClass::closed;
  rep.n = st.n;
  rep.components = 1;
  rep.depth = st.n + 1;
  rep.dim = st.n + 1;
  rep.unmixed = true;
  rep.cm = true;
  rep.hilbert_numerator.assign(1, 1);
  long long e = 1, type = 1;
  bool gor = true;
  for (int k : st.clique_sizes()) {
    rep.hilbert_numerator.push_back(0);
    for (std::size_t q = rep.hilbert_numerator.size() - 1; q > 0; --q)
      rep.hilbert_numerator[q] += (k - 1) * rep.hilbert_numerator[q - 1];
    e *= k;
    type *= k - 1;
    if (k != 2) gor = false;
  }
  rep.multiplicity = e;
  rep.a_invariant = st.clique_count() - (st.n + 1);
  rep.cm_type = type;
  rep.gorenstein = gor;
  rep.complete_intersection = gor;
  return rep;
}

}  // namespace bei

#endif
