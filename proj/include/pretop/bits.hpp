#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pretop {

// Subsets of a universe with at most 64 points, as characteristic bitmasks.
using mask_t = std::uint64_t;

inline constexpr mask_t full_mask(int n) {
  return n >= 64 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
}

inline constexpr bool has_bit(mask_t m, int i) { return (m >> i) & 1; }

inline constexpr int popcount(mask_t m) { return std::popcount(m); }

inline constexpr bool subset_of(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline std::vector<int> mask_elements(mask_t m) {
  std::vector<int> out;
  while (m != 0) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

// Canonical order on subsets: smaller cardinality first, then the set whose
// sorted element list is lexicographically earlier. Total on distinct masks.
inline bool canonical_mask_less(mask_t a, mask_t b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  mask_t diff = a ^ b;
  int i = std::countr_zero(diff);
  return has_bit(a, i);
}

}  // namespace pretop
