#ifndef BEI_RESOLUTION_HPP
#define BEI_RESOLUTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bei/groebner.hpp"
#include "bei/polynomial.hpp"

namespace bei {

// One free module in a Schreyer resolution.  Basis element a sits over a
// tower of lead terms; lead_total is the product of lead monomials down the
// tower and path the chain of lead components (bottom level first).  The
// induced order compares m * lead_total lexicographically, then breaks ties
// along the path and finally by basis index, smaller index winning.
struct FreeModule {
  std::vector<Monomial> lead_total;
  std::vector<std::vector<int>> path;
  std::vector<int> degree;

  int size() const { return (int)lead_total.size(); }

  static FreeModule trivial() {
    FreeModule f;
    f.lead_total.push_back(Monomial::one());
    f.path.push_back({});
    f.degree.push_back(0);
    return f;
  }
};

struct ModTerm {
  Monomial m;
  int comp = 0;
  std::uint32_t c = 0;
};

// Terms sorted strictly decreasing in the module order of the host module.
using ModPoly = std::vector<ModTerm>;

// > 0 if (m1, c1) is the larger module term in F's Schreyer order.
inline int mod_cmp(const FreeModule& f, const Monomial& m1, int c1, const Monomial& m2, int c2) {
  Monomial t1 = m1 * f.lead_total[c1];
  Monomial t2 = m2 * f.lead_total[c2];
  int c = lex_cmp(t1, t2);
  if (c != 0) return c;
  if (c1 == c2) return 0;
  const auto& p1 = f.path[c1];
  const auto& p2 = f.path[c2];
  for (std::size_t i = 0; i < p1.size() && i < p2.size(); ++i)
    if (p1[i] != p2[i]) return p1[i] < p2[i] ? 1 : -1;
  return c1 < c2 ? 1 : -1;
}

namespace detail {

inline ModPoly mod_normalize(std::vector<ModTerm> terms, const FreeModule& f, const GF& gf) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return mod_cmp(f, a.m, a.comp, b.m, b.comp) > 0;
  });
  ModPoly out;
  out.reserve(terms.size());
  for (auto& tm : terms) {
    if (!out.empty() && out.back().comp == tm.comp && out.back().m == tm.m)
      out.back().c = gf.add(out.back().c, tm.c);
    else
      out.push_back(tm);
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  return out;
}

// u - c * mon * g, ordered merge under f's order.
inline ModPoly mod_sub_scaled(const ModPoly& u, std::uint32_t c, const Monomial& mon,
                              const ModPoly& g, const FreeModule& f, const GF& gf) {
  ModPoly out;
  out.reserve(u.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(u[i++]);
      continue;
    }
    Monomial gm = g[j].m * mon;
    if (i == u.size()) {
      std::uint32_t v = gf.neg(gf.mul(c, g[j].c));
      if (v) out.push_back({gm, g[j].comp, v});
      ++j;
      continue;
    }
    int cmp = mod_cmp(f, u[i].m, u[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(u[i++]);
    } else if (cmp < 0) {
      std::uint32_t v = gf.neg(gf.mul(c, g[j].c));
      if (v) out.push_back({gm, g[j].comp, v});
      ++j;
    } else {
      std::uint32_t v = gf.sub(u[i].c, gf.mul(c, g[j].c));
      if (v) out.push_back({gm, u[i].comp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct RecordedStep {
  Monomial q;
  int reducer = 0;
  std::uint32_t c = 0;
};

// Full normal form against `basis` (elements of the module ordered by f),
// optionally recording the quotient of every cancellation.  `skip` exempts
// one basis element, for inter-reduction.
inline ModPoly mod_normal_form(ModPoly u, const std::vector<ModPoly>& basis, const FreeModule& f,
                               const GF& gf, std::vector<RecordedStep>* record = nullptr,
                               std::size_t skip = (std::size_t)-1) {
  std::size_t scan = 0;
  while (scan < u.size()) {
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const ModPoly& g = basis[k];
      if (g.empty() || g.front().comp != u[scan].comp || !g.front().m.divides(u[scan].m)) continue;
      Monomial q = u[scan].m.divided_by(g.front().m);
      std::uint32_t c = gf.mul(u[scan].c, gf.inv(g.front().c));
      if (record) record->push_back({q, (int)k, c});
      u = mod_sub_scaled(u, c, q, g, f, gf);
      reduced = true;
      break;
    }
    if (!reduced) ++scan;
  }
  return u;
}

}  // namespace detail

// A (generally non-minimal) graded free resolution of S/J built from the
// reduced Gröbner basis by iterated Schreyer syzygies:
//   modules[0] = S, maps[l][a] = image of the a-th basis element of
//   modules[l] inside modules[l-1].
// Each level's syzygy basis is minimalized (redundant lead terms dropped,
// tails reduced), which keeps the level sizes near the minimal Betti numbers.
struct Resolution {
  std::vector<FreeModule> modules;
  std::vector<std::vector<ModPoly>> maps;  // maps[0] unused

  int length() const { return (int)maps.size() - 1; }
};

namespace detail {

// Pre-filter the same-component pairs: Schreyer's theorem says the lead terms
// of the pair syzygies generate the initial module of the syzygy module, so
// pairs whose lead (lcm/lt_a) e_a is divisible by another pair's lead are
// redundant before any reduction work happens.
struct PairCandidate {
  int a, b;
  Monomial quotient;  // lcm(lt_a, lt_b) / lt_a — the syzygy lead monomial
};

inline std::vector<PairCandidate> minimal_pairs(const std::vector<ModPoly>& gb) {
  std::vector<std::vector<int>> by_comp;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    int comp = gb[i].front().comp;
    if ((int)by_comp.size() <= comp) by_comp.resize(comp + 1);
    by_comp[comp].push_back((int)i);
  }
  std::vector<PairCandidate> out;
  for (const auto& group : by_comp) {
    for (std::size_t ai = 0; ai < group.size(); ++ai) {
      int a = group[ai];
      std::vector<PairCandidate> anchor;
      for (std::size_t bi = 0; bi < group.size(); ++bi) {
        int b = group[bi];
        if (b <= a) continue;
        Monomial l = lcm(gb[a].front().m, gb[b].front().m);
        anchor.push_back({a, b, l.divided_by(gb[a].front().m)});
      }
      // keep only minimal quotients (ties: smallest b)
      for (std::size_t i = 0; i < anchor.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < anchor.size() && !redundant; ++j) {
          if (i == j) continue;
          if (anchor[j].quotient.divides(anchor[i].quotient) &&
              (!(anchor[j].quotient == anchor[i].quotient) || anchor[j].b < anchor[i].b))
            redundant = true;
        }
        if (!redundant) out.push_back(anchor[i]);
      }
    }
  }
  return out;
}

}  // namespace detail

// Builds the resolution from a reduced Gröbner basis of the ideal.  Levels
// stop when a level has no same-component pairs (its kernel is zero) or at
// nvars + 1 maps, which already covers every possible nonzero Tor.
inline Resolution schreyer_resolution(const PolyRing& ring, const std::vector<Polynomial>& reduced_gb) {
  const GF& gf = ring.gf;
  Resolution res;
  res.modules.push_back(FreeModule::trivial());
  res.maps.emplace_back();

  // level 1
  FreeModule f1;
  std::vector<ModPoly> current;
  for (const Polynomial& g : reduced_gb) {
    ModPoly mp;
    for (const Term& tm : g.t) mp.push_back({tm.m, 0, tm.c});
    current.push_back(std::move(mp));
    f1.lead_total.push_back(g.lead().m);
    f1.path.push_back({0});
    f1.degree.push_back(g.degree());
  }
  res.modules.push_back(std::move(f1));
  res.maps.push_back(current);

  // maps up to level nvars + 1 suffice: Tor vanishes above the global
  // dimension, so deeper levels of the (non-minimal) tail are never read.
  const int max_levels = ring.nvars() + 1;
  for (int level = 1; level < max_levels && !res.maps[level].empty(); ++level) {
    const FreeModule& f_prev = res.modules[level - 1];
    const FreeModule& f_cur = res.modules[level];
    const std::vector<ModPoly>& gb = res.maps[level];

    auto pairs = detail::minimal_pairs(gb);
    if (pairs.empty()) break;

    std::vector<ModPoly> syzygies;
    for (const auto& pr : pairs) {
      const ModPoly& ga = gb[pr.a];
      const ModPoly& gx = gb[pr.b];
      Monomial l = lcm(ga.front().m, gx.front().m);
      Monomial qa = l.divided_by(ga.front().m);
      Monomial qb = l.divided_by(gx.front().m);
      // S-pair (both sides monic by construction)
      ModPoly u;
      for (const ModTerm& tm : ga) u.push_back({tm.m * qa, tm.comp, tm.c});
      u = detail::mod_sub_scaled(u, 1, qb, gx, f_prev, gf);
      std::vector<detail::RecordedStep> steps;
      ModPoly rem = detail::mod_normal_form(std::move(u), gb, f_prev, gf, &steps);
      if (!rem.empty())
        throw std::logic_error("S-pair did not reduce to zero against a complete basis");
      std::vector<ModTerm> syz;
      syz.push_back({qa, pr.a, 1});
      syz.push_back({qb, pr.b, gf.neg(1)});
      for (const auto& st : steps) syz.push_back({st.q, st.reducer, gf.neg(st.c)});
      syzygies.push_back(detail::mod_normalize(std::move(syz), f_cur, gf));
    }

    // minimalize leads, then tail-reduce the survivors
    std::vector<ModPoly> minimal;
    for (std::size_t i = 0; i < syzygies.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < syzygies.size() && !redundant; ++j) {
        if (i == j) continue;
        const ModTerm& li = syzygies[i].front();
        const ModTerm& lj = syzygies[j].front();
        if (li.comp == lj.comp && lj.m.divides(li.m) && (!(lj.m == li.m) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(syzygies[i]);
    }
    std::vector<ModPoly> next;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      ModPoly nf = detail::mod_normal_form(minimal[i], minimal, f_cur, gf, nullptr, i);
      if (nf.empty()) throw std::logic_error("syzygy vanished during inter-reduction");
      std::uint32_t scale = gf.inv(nf.front().c);
      for (ModTerm& tm : nf) tm.c = gf.mul(tm.c, scale);
      next.push_back(std::move(nf));
    }
    std::sort(next.begin(), next.end(), [&](const ModPoly& x, const ModPoly& y) {
      return mod_cmp(f_cur, x.front().m, x.front().comp, y.front().m, y.front().comp) > 0;
    });

    FreeModule f_next;
    for (const ModPoly& s : next) {
      const ModTerm& lead = s.front();
      f_next.lead_total.push_back(lead.m * f_cur.lead_total[lead.comp]);
      std::vector<int> p = f_cur.path[lead.comp];
      p.push_back(lead.comp);
      f_next.path.push_back(std::move(p));
      f_next.degree.push_back((int)lead.m.deg + f_cur.degree[lead.comp]);
    }
    res.modules.push_back(std::move(f_next));
    res.maps.push_back(std::move(next));
  }
  return res;
}

}  // namespace bei

#endif
