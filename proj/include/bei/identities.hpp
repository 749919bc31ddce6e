#ifndef BEI_IDENTITIES_HPP
#define BEI_IDENTITIES_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace bei {

using BigInt = boost::multiprecision::cpp_int;

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

// Combinatorial shadow of summing minimal-prime multiplicities: for positive
// integers b_1..b_r,
//   (b_1+1)...(b_r+1) = 1 + sum b_i
//     + sum_{s=1}^{r-1} sum_{1<=j_1<...<j_s<=r-1}
//         (b_1+...+b_{j_1}) * prod_{q=1}^{s-1}(b_{j_q+1}+...+b_{j_{q+1}} - 1)
//                          * (b_{j_s+1}+...+b_r).
// Index sets whose middle factor hits zero contribute nothing, so the sum may
// run over all index subsets.
inline IdentityCheck verify_multiplicity_identity(const std::vector<long long>& b) {
  const int r = (int)b.size();
  if (r < 1) throw std::invalid_argument("need at least one entry");
  for (long long v : b)
    if (v < 1) throw std::invalid_argument("entries must be positive");

  IdentityCheck out;
  out.lhs = 1;
  for (long long v : b) out.lhs *= BigInt(v + 1);

  std::vector<BigInt> prefix(r + 1);  // prefix[i] = b_1 + ... + b_i
  prefix[0] = 0;
  for (int i = 0; i < r; ++i) prefix[i + 1] = prefix[i] + b[i];

  out.rhs = 1 + prefix[r];
  // iterate over nonempty subsets {j_1 < ... < j_s} of {1..r-1}
  std::vector<int> j;
  auto rec = [&](auto&& self, int from) -> void {
    if (!j.empty()) {
      BigInt term = prefix[j.front()];
      for (std::size_t q = 0; q + 1 < j.size(); ++q)
        term *= prefix[j[q + 1]] - prefix[j[q]] - 1;
      term *= prefix[r] - prefix[j.back()];
      out.rhs += term;
    }
    for (int next = from; next <= r - 1; ++next) {
      j.push_back(next);
      self(self, next + 1);
      j.pop_back();
    }
  };
  rec(rec, 1);
  out.equal = (out.lhs == out.rhs);
  return out;
}

struct PowerIdentityCheck {
  BigInt lhs;                 // 2^r
  BigInt rhs_compositions;    // summing over ordered tuples
  BigInt rhs_partitions;      // summing over multisets (the failing reading)
  bool equal_compositions = false;
  bool equal_partitions = false;
};

// The all-ones specialization:
//   2^r = sum_{s=0}^{floor(r/2)} sum over (x_1..x_{s+1}) summing to r-s+1
//         of x_1 * ... * x_{s+1},
// where the inner sum must range over *compositions* (ordered tuples of
// positive integers).  Reading it over partitions undercounts; both values
// are reported.
inline PowerIdentityCheck verify_power_identity(int r) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  PowerIdentityCheck out;
  out.lhs = BigInt(1) << r;
  out.rhs_compositions = 0;
  out.rhs_partitions = 0;
  for (int s = 0; s <= r / 2; ++s) {
    const int total = r - s + 1;
    const int parts = s + 1;
    // compositions: ordered positive tuples
    std::vector<int> x;
    auto comp = [&](auto&& self, int remaining, int slots) -> void {
      if (slots == 1) {
        if (remaining < 1) return;
        BigInt term = remaining;
        for (int v : x) term *= v;
        out.rhs_compositions += term;
        return;
      }
      for (int v = 1; v + (slots - 1) <= remaining; ++v) {
        x.push_back(v);
        self(self, remaining - v, slots - 1);
        x.pop_back();
      }
    };
    comp(comp, total, parts);
    // partitions: non-increasing positive tuples, each multiset once
    auto part = [&](auto&& self, int remaining, int slots, int maxv) -> void {
      if (slots == 1) {
        if (remaining < 1 || remaining > maxv) return;
        BigInt term = remaining;
        for (int v : x) term *= v;
        out.rhs_partitions += term;
        return;
      }
      for (int v = std::min(maxv, remaining - (slots - 1)); v >= 1; --v) {
        x.push_back(v);
        self(self, remaining - v, slots - 1, v);
        x.pop_back();
      }
    };
    part(part, total, parts, total);
  }
  out.equal_compositions = (out.lhs == out.rhs_compositions);
  out.equal_partitions = (out.lhs == out.rhs_partitions);
  return out;
}

}  // namespace bei

#endif
