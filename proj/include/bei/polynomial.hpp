#ifndef BEI_POLYNOMIAL_HPP
#define BEI_POLYNOMIAL_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/gf.hpp"
#include "bei/monomial.hpp"

namespace bei {

struct Term {
  Monomial m;
  std::uint32_t c = 0;  // nonzero in canonical form
};

// Polynomial over GF(p): terms sorted strictly decreasing in lex order,
// no zero coefficients.  The ring context (variable count, field) travels
// separately as PolyRing.
struct Polynomial {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  int degree() const { return t.empty() ? -1 : (int)t.front().m.deg; }

  bool is_homogeneous() const {
    for (const auto& term : t)
      if (term.m.deg != t.front().m.deg) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].c != o.t[i].c || !(t[i].m == o.t[i].m)) return false;
    return true;
  }
};

// The polynomial ring K[x_1..x_n, y_1..y_n] of a graph on n vertices, with
// lex order x_1 > ... > x_n > y_1 > ... > y_n.  Internally x_v has variable
// index v and y_v has index n+v (vertices 0-based).
struct PolyRing {
  int n;   // vertices
  GF gf;

  PolyRing(int vertices, std::uint32_t p) : n(vertices), gf(p) {
    if (2 * n > kMaxVars)
      throw std::invalid_argument("engine supports at most " + std::to_string(kMaxVars / 2) +
                                  " vertices (" + std::to_string(kMaxVars) + " ring variables)");
  }
  int nvars() const { return 2 * n; }
  int xvar(int v) const { return v; }
  int yvar(int v) const { return n + v; }
};

// Sort + combine into canonical form.
inline Polynomial normalize(std::vector<Term> terms, const GF& gf) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_greater(a.m, b.m); });
  Polynomial out;
  out.t.reserve(terms.size());
  for (auto& tm : terms) {
    if (!out.t.empty() && out.t.back().m == tm.m)
      out.t.back().c = gf.add(out.t.back().c, tm.c);
    else
      out.t.push_back(tm);
    if (!out.t.empty() && out.t.back().c == 0) out.t.pop_back();
  }
  return out;
}

// f - c * mon * g, the reduction kernel.  Single sorted merge.
inline Polynomial sub_scaled(const Polynomial& f, std::uint32_t c, const Monomial& mon,
                             const Polynomial& g, const GF& gf) {
  Polynomial out;
  out.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      out.t.push_back(f.t[i++]);
      continue;
    }
    Monomial gm = g.t[j].m * mon;
    if (i == f.t.size()) {
      std::uint32_t v = gf.neg(gf.mul(c, g.t[j].c));
      if (v) out.t.push_back({gm, v});
      ++j;
      continue;
    }
    int cmp = lex_cmp(f.t[i].m, gm);
    if (cmp > 0) {
      out.t.push_back(f.t[i++]);
    } else if (cmp < 0) {
      std::uint32_t v = gf.neg(gf.mul(c, g.t[j].c));
      if (v) out.t.push_back({gm, v});
      ++j;
    } else {
      std::uint32_t v = gf.sub(f.t[i].c, gf.mul(c, g.t[j].c));
      if (v) out.t.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  return out;
}

inline Polynomial scale(Polynomial f, std::uint32_t c, const GF& gf) {
  for (auto& tm : f.t) tm.c = gf.mul(tm.c, c);
  return f;
}

inline Polynomial make_monic(Polynomial f, const GF& gf) {
  if (f.is_zero() || f.lead().c == 1) return f;
  return scale(std::move(f), gf.inv(f.lead().c), gf);
}

inline std::string to_string(const Polynomial& f, const PolyRing& ring) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : f.t) {
    long long c = ring.gf.lift_signed(tm.c);
    if (first) {
      if (c == -1 && !tm.m.is_one()) os << "-";
      else if (c != 1 || tm.m.is_one()) os << c << (tm.m.is_one() ? "" : "*");
    } else {
      os << (c < 0 ? " - " : " + ");
      long long a = c < 0 ? -c : c;
      if (a != 1 || tm.m.is_one()) os << a << (tm.m.is_one() ? "" : "*");
    }
    if (!tm.m.is_one()) os << to_string(tm.m, ring.n);
    first = false;
  }
  return os.str();
}

}  // namespace bei

#endif
