#pragma once

#include <string>

namespace pretop {

// Brute-force caps. Defaults bound the exact searches; PRETOP_CAP_OVERRIDE
// ("name=value,name=value") or CLI --cap flags can raise them.
struct caps_t {
  int component_points = 10;    // connected-subset scans
  int product_points = 64;      // materialized product universes
  int product_members = 1 << 17;  // members of a materialized family
  int coset_count = 16;         // quotient topology subset scan
  int subgroup_order = 32;      // subgroup enumeration
  int iso_order = 12;           // isomorphism search
  int enum_points = 5;          // full pre-topology enumeration
  int enum_order_full = 8;      // group pre-topology enumeration, no filter
  int enum_order_filtered = 12;

  void apply_override(const std::string& spec);  // throws errc::bad_input
};

caps_t& caps();  // process-wide, seeded from PRETOP_CAP_OVERRIDE once

}  // namespace pretop
