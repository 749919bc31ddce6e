#ifndef BEI_HILBERT_HPP
#define BEI_HILBERT_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bei/monomial.hpp"
#include "bei/polynomial.hpp"

namespace bei {

// The Hilbert series of a quotient by a monomial ideal, as the K-polynomial
// numerator over (1-t)^nvars plus its reduced form over (1-t)^dim.
struct HilbertSeries {
  std::vector<long long> numerator;          // K-polynomial coefficients
  int denominator_exponent = 0;              // number of ring variables
  std::vector<long long> reduced_numerator;  // after cancelling all (1-t) factors
  int dimension = 0;                         // denominator exponent of the reduced form
  long long multiplicity = 0;                // reduced numerator at t = 1
  int a_invariant = 0;                       // deg(reduced numerator) - dimension
};

namespace detail {

inline void poly_trim(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p -= shift(q, by)
inline void poly_sub_shifted(std::vector<long long>& p, const std::vector<long long>& q, int by) {
  if (p.size() < q.size() + by) p.resize(q.size() + by, 0);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + by] -= q[i];
}
inline void poly_add_shifted(std::vector<long long>& p, const std::vector<long long>& q, int by) {
  if (p.size() < q.size() + by) p.resize(q.size() + by, 0);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + by] += q[i];
}

// Remove generators divisible by another generator.
inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg || (a.deg == b.deg && lex_cmp(a, b) < 0); });
  std::vector<Monomial> keep;
  for (const Monomial& m : gens) {
    bool dominated = false;
    for (const Monomial& k : keep)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(m);
  }
  gens = std::move(keep);
}

// K-polynomial of S/I for a minimal monomial generating set, by pivoting on
// a variable x occurring in the most generators:
//   K(I) = K(I + (x)) + t * K(I : x).
// Base cases: no generators, and pairwise-coprime generators (a regular
// sequence, K = prod(1 - t^deg)).
inline std::vector<long long> k_polynomial(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens[0].deg == 0) return {};  // unit ideal: K = 0

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime_with(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    std::vector<long long> out{1};
    for (const Monomial& m : gens) {
      std::vector<long long> next(out);
      poly_sub_shifted(next, out, m.deg);
      out = std::move(next);
    }
    poly_trim(out);
    return out;
  }

  int counts[kMaxVars] = {};
  for (const Monomial& m : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[v]) ++counts[v];
  int pivot = 0;
  for (int v = 1; v < kMaxVars; ++v)
    if (counts[v] > counts[pivot]) pivot = v;

  // I + (x_pivot): generators not involving the pivot, plus the pivot itself
  std::vector<Monomial> plus{Monomial::variable(pivot)};
  for (const Monomial& m : gens)
    if (!m.e[pivot]) plus.push_back(m);

  // I : x_pivot: divide out one pivot power where present
  std::vector<Monomial> colon;
  for (const Monomial& m : gens) {
    if (m.e[pivot]) {
      Monomial q = m;
      --q.e[pivot];
      --q.deg;
      colon.push_back(q);
    } else {
      colon.push_back(m);
    }
  }

  std::vector<long long> out = k_polynomial(std::move(plus));
  poly_add_shifted(out, k_polynomial(std::move(colon)), 1);
  poly_trim(out);
  return out;
}

}  // namespace bei::detail

// K-polynomial numerator of S/I over (1-t)^nvars.
inline std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens) {
  return detail::k_polynomial(gens);
}

inline HilbertSeries hilbert_series_monomial(const PolyRing& ring, const std::vector<Monomial>& gens) {
  HilbertSeries hs;
  hs.numerator = hilbert_numerator(gens);
  hs.denominator_exponent = ring.nvars();
  if (hs.numerator.empty()) throw std::invalid_argument("unit ideal has no Hilbert series");

  // cancel (1-t) factors: while N(1) == 0, divide via prefix sums
  std::vector<long long> reduced = hs.numerator;
  int cancelled = 0;
  auto value_at_one = [](const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  while (value_at_one(reduced) == 0) {
    std::vector<long long> q(reduced.size() ? reduced.size() - 1 : 0, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
      acc += reduced[i];
      q[i] = acc;
    }
    detail::poly_trim(q);
    reduced = std::move(q);
    ++cancelled;
    if (reduced.empty()) throw std::logic_error("numerator vanished while reducing");
  }
  hs.reduced_numerator = std::move(reduced);
  hs.dimension = hs.denominator_exponent - cancelled;
  hs.multiplicity = value_at_one(hs.reduced_numerator);
  hs.a_invariant = (int)hs.reduced_numerator.size() - 1 - hs.dimension;
  return hs;
}

// Coefficients of the series N(t) / (1-t)^d up to degree `upto` — the Hilbert
// function values, for cross-checking against direct monomial counts.
inline std::vector<long long> hilbert_function_values(const std::vector<long long>& numerator,
                                                      int denominator_exponent, int upto) {
  std::vector<long long> vals(upto + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && (int)i <= upto; ++i) vals[i] = numerator[i];
  // multiply by 1/(1-t)^d: d successive prefix-sum passes
  for (int pass = 0; pass < denominator_exponent; ++pass)
    for (int i = 1; i <= upto; ++i) vals[i] += vals[i - 1];
  return vals;
}

}  // namespace bei

#endif
