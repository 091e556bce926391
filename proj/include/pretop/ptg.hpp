#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretop/group.hpp"
#include "pretop/setfam.hpp"

namespace pretop {

// Group + pre-topology on the same universe. No axiom is presumed;
// classification is always explicit.
struct pretop_group {
  finite_group group;
  pretopology top;

  int order() const { return group.order(); }
  int e() const { return group.identity; }
  std::vector<mask_t> opens_at(int g) const;  // opens containing g
};

pretop_group make_pretop_group(finite_group g, pretopology t);  // checks universes

// Generic counterexample record: a handful of sets and points plus a note.
struct witness_t {
  std::vector<mask_t> sets;
  std::vector<int> points;
  std::string note;
};

struct classification {
  bool right_ptg = false, left_ptg = false, semi = false, quasi = false,
       para = false, pretopological = false, strongly = false,
       symmetrically = false, almost = false, topological = false;
  std::map<std::string, witness_t> witnesses;  // flag name -> counterexample

  bool flag(const std::string& name) const;
};

classification classify(const pretop_group& x);

// Family of identity neighborhoods used to generate a group pre-topology.
struct nbhd_system {
  finite_group group;
  std::vector<mask_t> members;  // each contains the identity
};

struct nbhd_axioms_result {
  // (1) product: some VW inside U      (2) inverse: some V^-1 inside U
  // (3) translation: Vg inside U for g in U
  // (4) conjugation: some gVg^-1 inside U for every g
  bool product = false, inverse = false, translation = false, conjugation = false;
  std::map<std::string, witness_t> witnesses;
  bool all() const { return product && inverse && translation && conjugation; }
};

nbhd_axioms_result nbhd_axioms_report(const nbhd_system& sys);

// tau = union closure of {Ua}; equals {W : every x in W has some Ux inside W}
// (checked internally). The result classifies as pretopological.
// Pre: the axioms hold; otherwise throws AxiomsViolated naming the axiom.
pretop_group construct_from_nbhd_system(const nbhd_system& sys);

struct finite_props_report {
  bool square_roots = true;   // every open U at e has an open V at e, V^2 in U
  bool atom_powers = true;    // atoms A at e: A^-1 an atom, A^k = A for k <= |G|
  std::optional<witness_t> violation;
};

// Pre: the instance classifies as pretopological.
finite_props_report check_finite_props(const pretop_group& x);

// Whether every open U at e admits an open V at e with VV^-1 inside U.
bool almost_characterization(const pretop_group& x);

struct component_report {
  mask_t component = 0;
  bool is_subgroup = false;
  bool is_closed = false;
  bool is_invariant = false;
  // When the whole space is connected: G = union of (U u U^-1)^k, k <= |G|,
  // for every open U at e.
  std::optional<bool> generation = std::nullopt;
};

component_report component_of_identity(const pretop_group& x);

// Max over minimal opens U at e of the least number of left translates of U
// covering G (exact set cover). Pre: pretopological.
int covering_index(const pretop_group& x);

struct subgroup_record {
  mask_t subgroup = 0;
  bool discrete = false;
  bool closed = false;
  bool open = false;
  bool open_implies_closed = true;  // vacuous when not open
  // Almost instances, discrete H: the translate family {hV} of a symmetric
  // V with V^4 inside U, U n H = {e}, is discrete in G.
  std::optional<bool> disjoint_family_discrete = std::nullopt;
  bool closed_in_coreflexion = false;
};

std::vector<subgroup_record> discrete_subgroup_report(const pretop_group& x);

// Coarsest group topology refining the pre-topology: cosets of the
// intersection of all opens at e (that intersection is an open subgroup's
// worth of data only when the instance is pretopological).
pretopology coreflexion_topology(const pretop_group& x);

// A family of opens is discrete when every point has an open neighborhood
// meeting at most one member.
bool discrete_open_family(const pretopology& top, const std::vector<mask_t>& fam);

}  // namespace pretop
