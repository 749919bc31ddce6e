#ifndef BEI_GROEBNER_HPP
#define BEI_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "bei/graph.hpp"
#include "bei/polynomial.hpp"

namespace bei {

// Generators x_i y_j - x_j y_i of the edge ideal, one per edge, applied after
// the given relabeling.  Lead terms are the x_i y_j with i < j.
inline std::vector<Polynomial> binomial_edge_ideal(const PolyRing& ring, const Graph& g,
                                                   const Labeling& lab) {
  if (ring.n != g.n()) throw std::invalid_argument("ring size does not match graph");
  const Graph h = lab.apply(g);
  std::vector<Polynomial> gens;
  for (auto [a, b] : h.edges()) {
    int i = a - 1, j = b - 1;
    Polynomial f;
    f.t.push_back({Monomial::variable(ring.xvar(i)) * Monomial::variable(ring.yvar(j)), 1});
    f.t.push_back({Monomial::variable(ring.xvar(j)) * Monomial::variable(ring.yvar(i)),
                   ring.gf.neg(1)});
    gens.push_back(std::move(f));
  }
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& f, const Polynomial& g2) { return lex_greater(f.lead().m, g2.lead().m); });
  return gens;
}

inline std::vector<Polynomial> binomial_edge_ideal(const PolyRing& ring, const Graph& g) {
  return binomial_edge_ideal(ring, g, Labeling::identity(g.n()));
}

// Full normal form of f against the basis: repeatedly cancels the highest
// reducible term, including tail terms, so results are unique for a Gröbner
// basis.  Reducer choice: first basis element (in list order) whose lead
// divides the term.
inline Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis, const GF& gf) {
  std::size_t scan = 0;  // terms before `scan` are irreducible
  while (scan < f.t.size()) {
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero() || !g.lead().m.divides(f.t[scan].m)) continue;
      Monomial q = f.t[scan].m.divided_by(g.lead().m);
      std::uint32_t c = gf.mul(f.t[scan].c, gf.inv(g.lead().c));
      f = sub_scaled(f, c, q, g, gf);
      reduced = true;
      break;
    }
    if (!reduced) ++scan;
  }
  return f;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const GF& gf) {
  Monomial l = lcm(f.lead().m, g.lead().m);
  Polynomial sf = scale(f, gf.inv(f.lead().c), gf);
  // s = (l / lt(f)) f - (l / lt(g)) g, both made monic
  Polynomial shifted;
  shifted.t.reserve(sf.t.size());
  Monomial qf = l.divided_by(f.lead().m);
  for (const auto& tm : sf.t) shifted.t.push_back({tm.m * qf, tm.c});
  return sub_scaled(shifted, gf.inv(g.lead().c), l.divided_by(g.lead().m), g, gf);
}

struct GroebnerBasis {
  std::vector<Polynomial> basis;  // reduced, monic, sorted by decreasing lead
  int max_degree = 0;
  long long spairs_processed = 0;
};

namespace detail {

struct Pair {
  int i, j;
  Monomial l;
};

// Normal selection: smallest lcm degree first, lex tie-break on the lcm,
// then on indices, so runs are deterministic.
inline bool pair_after(const Pair& a, const Pair& b) {
  if (a.l.deg != b.l.deg) return a.l.deg > b.l.deg;
  int c = lex_cmp(a.l, b.l);
  if (c != 0) return c < 0;
  return std::pair(a.i, a.j) > std::pair(b.i, b.j);
}

}  // namespace detail

// Buchberger with the product (coprimality) criterion and normal selection.
// Returns the unique reduced Gröbner basis for the lex order.
inline GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                                int degree_stop = 0) {
  const GF& gf = ring.gf;
  std::vector<Polynomial> basis;
  std::vector<detail::Pair> queue;

  auto push_element = [&](Polynomial f) {
    f = make_monic(std::move(f), gf);
    int idx = (int)basis.size();
    for (int k = 0; k < idx; ++k) {
      if (basis[k].is_zero()) continue;
      if (basis[k].lead().m.coprime_with(f.lead().m)) continue;  // product criterion
      queue.push_back({k, idx, lcm(basis[k].lead().m, f.lead().m)});
      std::push_heap(queue.begin(), queue.end(), detail::pair_after);
    }
    basis.push_back(std::move(f));
  };

  GroebnerBasis out;
  for (const Polynomial& f : gens) {
    if (f.is_zero()) continue;
    Polynomial nf = normal_form(f, basis, gf);
    if (!nf.is_zero()) push_element(std::move(nf));
  }

  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(), detail::pair_after);
    detail::Pair pr = queue.back();
    queue.pop_back();
    ++out.spairs_processed;
    Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], gf);
    Polynomial nf = normal_form(std::move(s), basis, gf);
    if (nf.is_zero()) continue;
    if (degree_stop > 0 && nf.degree() > degree_stop) {
      // caller only wanted to know whether the basis stays below the bound
      out.max_degree = nf.degree();
      out.basis.clear();
      return out;
    }
    push_element(std::move(nf));
  }

  // inter-reduce: drop elements whose lead divides another's lead, then
  // tail-reduce the survivors -> the reduced basis
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lead().m.divides(basis[i].lead().m)) {
        // on equal leads keep the earlier element
        if (!(basis[j].lead().m == basis[i].lead().m) || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(normal_form(minimal[i], others, gf), gf));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& f, const Polynomial& g) { return lex_greater(f.lead().m, g.lead().m); });
  out.basis = std::move(reduced);
  for (const Polynomial& f : out.basis) out.max_degree = std::max(out.max_degree, f.degree());
  return out;
}

// Is the edge-ideal generating set already a Gröbner basis under the
// labeling, i.e. does the reduced basis stay quadratic?  Since the
// generators are homogeneous quadrics, any new basis element has degree
// at least 3, so the degree bound certifies the answer either way.
inline bool is_quadratic_gb(const PolyRing& ring, const Graph& g, const Labeling& lab) {
  GroebnerBasis gb = buchberger(ring, binomial_edge_ideal(ring, g, lab), 2);
  return gb.max_degree <= 2;
}

inline std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lead;
  lead.reserve(gb.basis.size());
  for (const Polynomial& f : gb.basis) lead.push_back(f.lead().m);
  return lead;
}

}  // namespace bei

#endif
