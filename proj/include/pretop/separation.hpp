#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pretop/ptg.hpp"
#include "pretop/setfam.hpp"

namespace pretop {

// Ordered level partition witnessing a pre-continuous map into [0,1]:
// blocks listed bottom (value 0) to top (value 1).
using level_partition = std::vector<mask_t>;

struct separation_report_t {
  bool t0 = false, t1 = false, t2 = false, regular = false,
       completely_regular = false;
  std::map<std::string, witness_t> witnesses;
};

separation_report_t separation_report(const pretopology& top);

// T1 plus point/closed-set separation by disjoint opens, without the
// complete-regularity search; cheap enough for quotient scans.
bool is_regular(const pretopology& top);

// A finite-valued map into [0,1] with these level sets is pre-continuous
// exactly when every contiguous run of blocks has open union; on a
// union-closed family that reduces to every block being open.
bool level_partition_precontinuous(const pretopology& top, const level_partition& p);

// Decides whether some pre-continuous f: X -> [0,1] has f(z)=0 and f=1 on C.
// Pre: C closed, z outside C. Returns the witness partition when it exists.
std::optional<level_partition> completely_regular_pair(const pretopology& top,
                                                       int z, mask_t c);

// Conjunction of completely_regular_pair over all (z, closed C) with z
// outside C. Pre: T1 (throws NotT1 otherwise).
bool completely_regular_space(const pretopology& top);

// The same conjunction without the T1 gate (the functional separation
// property on its own).
bool functionally_separated_all_pairs(const pretopology& top);

}  // namespace pretop
