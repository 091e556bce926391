#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretop/ptg.hpp"
#include "pretop/separation.hpp"

namespace pretop {

// Coset space with the quotient pre-topology: opens are exactly the coset
// sets whose projection preimage is open downstairs.
struct quotient_space {
  pretop_group base;
  mask_t subgroup = 0;
  std::vector<mask_t> cosets;   // canonical (least-representative) order
  std::vector<int> projection;  // point -> coset index
  pretopology top;              // on the coset universe, labels "<repr>+H"

  struct checks_t {
    bool pi_open = false;          // images of opens are open
    bool translate_prebase = false;  // {pi(xU)} is a local pre-base at xH
    std::optional<bool> t1;        // computed when H is closed
    std::optional<bool> regular;   // computed when H is closed
  } checks;
};

// Pre: H a subgroup, the instance at least semi-pre-topological,
// coset count within caps().coset_count.
quotient_space coset_space(const pretop_group& x, mask_t h,
                           side_t side = side_t::left);

// (quotient discrete) == (H open); a false return is a finding.
bool discrete_iff_open_check(const pretop_group& x, mask_t h);

struct quotient_group_result {
  pretop_group quotient;
  std::vector<mask_t> cosets;
  std::vector<int> projection;
  classification cls;            // must report pretopological
  separation_report_t separation;  // regularity of the quotient
  bool sandwich_ok = true;  // WV in U implies closure(pi(V)) in pi(U)
};

// Pre: H closed normal, instance pretopological.
quotient_group_result quotient_group_pretop(const pretop_group& x, mask_t h);

struct first_iso_report {
  bool ok = false;
  mask_t kernel_set = 0;
  std::string detail;
};

// Builds N = ker p, the quotient (G/N, quotient pre-topology) and
// Phi(xN) = p(x); verifies Phi is a pre-topological isomorphism.
// Pre: p a surjective pre-continuous open homomorphism.
first_iso_report first_isomorphism_check(const group_hom& p, const pretop_group& g,
                                         const pretop_group& h);

// Group isomorphism carrying opens onto opens, by backtracking.
// Pre: orders equal and <= caps().iso_order.
bool isomorphic(const pretop_group& a, const pretop_group& b);

// Trace instance on a subgroup: subgroup Cayley restriction + subspace
// pre-topology, relabeled with the subgroup's own element labels.
pretop_group subgroup_instance(const pretop_group& x, mask_t h);

}  // namespace pretop
