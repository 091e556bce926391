// Test-only independent oracles: plain brute force, no sharing with the
// library implementations they cross-check.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "pretop/group.hpp"
#include "pretop/prenorm.hpp"
#include "pretop/setfam.hpp"

namespace oracles {

using pretop::dyadic;
using pretop::mask_t;

// smallest pre-base size: ascending k-subset scan over the opens
inline int weight(const pretop::pretopology& top) {
  const auto& opens = top.opens();
  int m = static_cast<int>(opens.size());
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<mask_t> cand;
      for (int i : pick) cand.push_back(opens[i]);
      bool prebase = true;
      for (mask_t open : opens) {
        mask_t covered = 0;
        for (mask_t c : cand)
          if (pretop::subset_of(c, open)) covered |= c;
        if (covered != open) {
          prebase = false;
          break;
        }
      }
      if (prebase) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return m;
}

// smallest local pre-base at z: subsets of the opens containing z
inline int character_at(const pretop::pretopology& top, int z) {
  std::vector<mask_t> at_z;
  for (mask_t open : top.opens())
    if (pretop::has_bit(open, z)) at_z.push_back(open);
  int m = static_cast<int>(at_z.size());
  int best = m;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<mask_t> cand;
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) cand.push_back(at_z[i]);
    bool local = true;
    for (mask_t open : at_z) {
      bool covered = false;
      for (mask_t c : cand)
        if (pretop::subset_of(c, open)) {
          covered = true;
          break;
        }
      if (!covered) {
        local = false;
        break;
      }
    }
    if (local) best = std::min(best, static_cast<int>(cand.size()));
  }
  return best;
}

// largest pairwise-disjoint family of nonempty opens (plain recursion)
inline int cellularity(const pretop::pretopology& top) {
  std::vector<mask_t> opens;
  for (mask_t open : top.opens())
    if (open != 0) opens.push_back(open);
  int best = 0;
  std::vector<size_t> stack;
  std::function<void(size_t, mask_t, int)> rec = [&](size_t idx, mask_t used, int depth) {
    best = std::max(best, depth);
    for (size_t i = idx; i < opens.size(); ++i)
      if ((opens[i] & used) == 0) rec(i + 1, used | opens[i], depth + 1);
  };
  rec(0, 0, 0);
  return best;
}

// smallest set meeting every nonempty open: all subsets, ascending size
inline int density(const pretop::pretopology& top) {
  int n = top.points();
  int best = n;
  for (mask_t d = 0; d < (mask_t{1} << n); ++d) {
    bool hits = true;
    for (mask_t open : top.opens())
      if (open != 0 && (open & d) == 0) {
        hits = false;
        break;
      }
    if (hits) best = std::min(best, pretop::popcount(d));
  }
  return best;
}

// resolvability by scanning all two-colorings; dense = meets every
// nonempty open
inline bool resolvable(const pretop::pretopology& top) {
  int n = top.points();
  auto dense = [&](mask_t s) {
    for (mask_t open : top.opens())
      if (open != 0 && (open & s) == 0) return false;
    return true;
  };
  for (mask_t a = 0; a < (mask_t{1} << n); ++a)
    if (dense(a) && dense(top.space() & ~a)) return true;
  return false;
}

// factorization infimum by explicit dynamic programming over word lengths
inline std::vector<dyadic> prenorm_by_factorizations(const pretop::finite_group& g,
                                                     const std::vector<dyadic>& cost,
                                                     int max_len) {
  int n = g.order();
  dyadic inf = dyadic::whole(1000);
  std::vector<dyadic> best(n, inf);
  best[g.identity] = dyadic::zero();
  for (int len = 0; len < max_len; ++len) {
    std::vector<dyadic> next = best;
    for (int x = 0; x < n; ++x) {
      if (best[x] == inf) continue;
      for (int a = 0; a < n; ++a) {
        dyadic alt = best[x] + cost[a];
        int to = g.op(x, a);
        if (alt < next[to]) next[to] = alt;
      }
    }
    best = std::move(next);
  }
  return best;
}

// the spec's step costs, recomputed independently of the library
inline std::vector<dyadic> chain_costs(const pretop::finite_group& g,
                                       const std::vector<mask_t>& chain) {
  int k = static_cast<int>(chain.size()) - 1;
  std::vector<dyadic> cost(g.order());
  for (int a = 0; a < g.order(); ++a) {
    if (pretop::has_bit(chain[k], a)) {
      cost[a] = dyadic::zero();
    } else if (pretop::has_bit(chain[0], a)) {
      int m = 0;
      for (int j = 0; j <= k; ++j)
        if (pretop::has_bit(chain[j], a)) m = j;
      cost[a] = dyadic::half_pow(m);
    } else {
      cost[a] = dyadic::whole(2);
    }
  }
  return cost;
}

// separating function search over a value grid {0, 1/(2n), ..., 1};
// pre-continuity = every preimage of a value subset is open
inline bool completely_regular_pair_grid(const pretop::pretopology& top, int z,
                                         mask_t c) {
  int n = top.points();
  int levels = 2 * n + 1;  // value i/(2n)
  std::vector<int> value(n, 0);
  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == n) {
      if (value[z] != 0) return false;
      for (int q : pretop::mask_elements(c))
        if (value[q] != levels - 1) return false;
      // check preimages of all subsets of attained values
      std::vector<int> used;
      for (int q = 0; q < n; ++q)
        if (std::find(used.begin(), used.end(), value[q]) == used.end())
          used.push_back(value[q]);
      int m = static_cast<int>(used.size());
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
        mask_t pre = 0;
        for (int q = 0; q < n; ++q)
          for (int i = 0; i < m; ++i)
            if (((pick >> i) & 1) && value[q] == used[i]) pre |= mask_t{1} << q;
        if (!top.is_open(pre)) return false;
      }
      return true;
    }
    for (int v = 0; v < levels; ++v) {
      value[p] = v;
      if (rec(p + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace oracles
