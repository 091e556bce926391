#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pretop/universe.hpp"

namespace pretop {

// Finite family of subsets, deduplicated, in canonical order
// (cardinality, then canonical_mask_less).
struct set_family {
  universe_t universe;
  std::vector<mask_t> members;  // canonical order, no duplicates

  set_family() = default;
  set_family(universe_t u, std::vector<mask_t> ms);  // sorts + dedups

  int size() const { return static_cast<int>(members.size()); }
  bool contains(mask_t m) const;

  friend bool operator==(const set_family&, const set_family&) = default;
};

// Union-closed family containing the empty set whose total union is the
// universe (hence the full set is a member). No intersection axiom.
struct pretopology {
  set_family fam;

  const universe_t& universe() const { return fam.universe; }
  int points() const { return fam.universe.size(); }
  mask_t space() const { return fam.universe.all(); }
  const std::vector<mask_t>& opens() const { return fam.members; }
  bool is_open(mask_t m) const { return fam.contains(m); }
};

struct pretopology_violation {
  enum kind_t { missing_empty, missing_full, union_not_member } kind;
  mask_t a = 0, b = 0;  // the witnessing pair for union_not_member
};

struct cardinal_report {
  int weight = 0;
  std::vector<int> character;  // per point
  int cellularity = 0;
  int density = 0;
  std::vector<mask_t> cellular_family;  // witness
  mask_t dense_set = 0;                 // witness
};

// Smallest union-closed family containing `generators`, the empty set and
// the full set. Pre: the generators cover the universe.
pretopology union_close(const universe_t& u, const std::vector<mask_t>& generators);

std::optional<pretopology_violation> is_pretopology(const set_family& fam);

// Every open is a union of members of `candidate` (the empty union gives
// the empty set). Pre: candidate is a subfamily of the topology.
bool is_prebase(const set_family& candidate, const pretopology& top);

// The union-irreducible nonempty opens. This is a pre-base contained in
// every pre-base, so its size is the weight; the empty set is never needed.
set_family minimal_prebase(const pretopology& top);

mask_t interior(const pretopology& top, mask_t s);
mask_t closure(const pretopology& top, mask_t s);

// Trace family {U n S} on the points of S. Pre: S nonempty.
pretopology subspace(const pretopology& top, mask_t s);

// Relabels a subspace with S's own labels (used for subgroup traces).
pretopology subspace_relabel(const pretopology& top, mask_t s);

bool is_connected(const pretopology& top, mask_t s);

// Union of all connected subsets containing z; exact subset scan,
// capped at caps().component_points.
mask_t component(const pretopology& top, int z);

// Minimal opens containing z.
std::vector<mask_t> atoms_at(const pretopology& top, int z);

cardinal_report cardinals(const pretopology& top);

// Two disjoint dense subsets when they exist (dense = meets every nonempty
// minimal open); exact backtracking over the minimal-open hypergraph.
std::optional<std::pair<mask_t, mask_t>> resolvable_witness(const pretopology& top);

// Box-generated pre-topology on A x B; point (a,b) has index a*|B|+b.
// Capped by caps().product_points / product_members.
pretopology product(const pretopology& a, const pretopology& b);

// S is open in the product pre-topology of a and b, decided by the box
// criterion without materializing the product family.
bool product_open(const pretopology& a, const pretopology& b,
                  const std::vector<mask_t>& s_rows);

}  // namespace pretop
