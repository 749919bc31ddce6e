#ifndef BEI_GF_HPP
#define BEI_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bei {

// Arithmetic in the prime field GF(p) for a runtime modulus p < 2^31.
// Elements are canonical representatives 0..p-1 stored as uint32_t.
struct GF {
  std::uint32_t p;

  explicit GF(std::uint32_t prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("field characteristic must be at least 2");
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    return pow(a, p - 2);  // p prime
  }
  // Signed representative for display: maps the upper half to negatives.
  long long lift_signed(std::uint32_t a) const {
    return (a > p / 2) ? (long long)a - (long long)p : (long long)a;
  }
};

// Rank of a dense matrix over GF(p); destroys its argument.
inline int gf_rank(std::vector<std::vector<std::uint32_t>>& m, const GF& gf) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && (std::size_t)rank < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const std::uint32_t s = gf.inv(m[rank][col]);
    for (std::size_t c = col; c < cols; ++c) m[rank][c] = gf.mul(m[rank][c], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if ((int)r == rank || m[r][col] == 0) continue;
      const std::uint32_t f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = gf.sub(m[r][c], gf.mul(f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace bei

#endif
