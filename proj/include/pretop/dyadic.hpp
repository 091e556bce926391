#pragma once

#include <cstdint>
#include <string>

namespace pretop {

// Non-negative dyadic rational num/2^exp, kept in lowest terms.
// All prenorm arithmetic is exact; no floating point anywhere near it.
struct dyadic {
  std::uint64_t num = 0;
  int exp = 0;

  constexpr dyadic() = default;
  constexpr dyadic(std::uint64_t n, int e) : num(n), exp(e) { reduce(); }

  static constexpr dyadic zero() { return dyadic{}; }
  static constexpr dyadic whole(std::uint64_t n) { return dyadic{n, 0}; }
  // 1/2^k
  static constexpr dyadic half_pow(int k) { return dyadic{1, k}; }

  constexpr void reduce() {
    if (num == 0) {
      exp = 0;
      return;
    }
    while (exp > 0 && (num & 1) == 0) {
      num >>= 1;
      --exp;
    }
  }

  constexpr bool is_zero() const { return num == 0; }

  friend constexpr dyadic operator+(dyadic a, dyadic b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return dyadic{(a.num << (e - a.exp)) + (b.num << (e - b.exp)), e};
  }

  friend constexpr bool operator==(dyadic a, dyadic b) {
    return a.num == b.num && a.exp == b.exp;
  }

  friend constexpr bool operator<(dyadic a, dyadic b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return (a.num << (e - a.exp)) < (b.num << (e - b.exp));
  }
  friend constexpr bool operator<=(dyadic a, dyadic b) { return a < b || a == b; }
  friend constexpr bool operator>(dyadic a, dyadic b) { return b < a; }
  friend constexpr bool operator>=(dyadic a, dyadic b) { return b <= a; }

  static constexpr dyadic min(dyadic a, dyadic b) { return a < b ? a : b; }

  std::string str() const {
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }

  static dyadic parse(const std::string& s);  // inverse of str(); throws bad_input
};

}  // namespace pretop
