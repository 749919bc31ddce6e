#ifndef BEI_MONOMIAL_HPP
#define BEI_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bei {

// Hard cap on ring variables (x_1..x_n, y_1..y_n needs 2n <= kMaxVars).
inline constexpr int kMaxVars = 32;

// A monomial in at most kMaxVars variables, exponents as bytes.
// The exponent array is always fully zero beyond the active variables,
// so comparisons can run over the whole array unconditionally.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  bool is_one() const { return deg == 0; }

  static Monomial one() { return Monomial{}; }

  static Monomial variable(int i) {
    Monomial m;
    m.e[i] = 1;
    m.deg = 1;
    return m;
  }

  Monomial& operator*=(const Monomial& o) {
    for (int i = 0; i < kMaxVars; ++i) e[i] = (std::uint8_t)(e[i] + o.e[i]);
    deg = (std::uint16_t)(deg + o.deg);
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // this / o; caller guarantees divisibility.
  Monomial divided_by(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = (std::uint8_t)(e[i] - o.e[i]);
    r.deg = (std::uint16_t)(deg - o.deg);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = (std::uint16_t)d;
    return r;
  }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && std::memcmp(e.data(), o.e.data(), kMaxVars) == 0;
  }
};

// Pure lexicographic order with variable 0 largest.  Byte-wise memcmp on the
// exponent array is exactly this order: the first differing exponent decides.
inline int lex_cmp(const Monomial& a, const Monomial& b) {
  return std::memcmp(a.e.data(), b.e.data(), kMaxVars);
}
inline bool lex_greater(const Monomial& a, const Monomial& b) { return lex_cmp(a, b) > 0; }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return (std::size_t)h;
  }
};

// Variable naming for a ring on a graph with n vertices: x_1..x_n then y_1..y_n.
inline std::string variable_name(int index, int n) {
  return index < n ? "x" + std::to_string(index + 1) : "y" + std::to_string(index - n + 1);
}

inline std::string to_string(const Monomial& m, int n) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    os << variable_name(i, n);
    if (m.e[i] > 1) os << "^" << (int)m.e[i];
    first = false;
  }
  return os.str();
}

}  // namespace bei

#endif
