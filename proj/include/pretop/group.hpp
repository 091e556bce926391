#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretop/universe.hpp"

namespace pretop {

// Finite group as a Cayley table over labeled elements.
struct finite_group {
  std::string name;
  universe_t universe;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return universe.size(); }
  int op(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }

  // Pointwise set products and inverses on bitmask subsets.
  mask_t mul(mask_t a, mask_t b) const;
  mask_t mul_left(int g, mask_t a) const;   // gA
  mask_t mul_right(mask_t a, int g) const;  // Ag
  mask_t set_inverse(mask_t a) const;
  mask_t conjugate(int g, mask_t a) const;  // g A g^-1
  mask_t pow_set(mask_t a, int k) const;    // A^k, k >= 1

  bool is_abelian() const;
  mask_t center() const;
};

// Validates a raw table (indices into 0..n-1). Reports the first violation
// precisely: NotAssociative(x,y,z), NoIdentity, NoInverse(x).
finite_group validate_group(const std::string& name, universe_t u,
                            std::vector<std::vector<int>> table);

finite_group cyclic(int n);
finite_group direct_product(const finite_group& g, const finite_group& h);
finite_group dihedral(int n);    // order 2n, n >= 1
finite_group quaternion8();
finite_group alternating4();
finite_group dicyclic3();        // order 12

// Built-in catalog of all groups of a given order up to isomorphism (<= 12).
std::vector<finite_group> groups_of_order(int n);
std::optional<finite_group> group_by_name(const std::string& name);

bool is_subgroup(const finite_group& g, mask_t s);
mask_t subgroup_generated(const finite_group& g, mask_t s);

enum class side_t { left, right };

// Coset partition in canonical order (by least representative index).
std::vector<mask_t> cosets(const finite_group& g, mask_t h, side_t side);

bool is_normal(const finite_group& g, mask_t h);

struct group_hom {
  const finite_group* domain = nullptr;
  const finite_group* codomain = nullptr;
  std::vector<int> map;
};

bool is_homomorphism(const finite_group& g, const finite_group& h,
                     const std::vector<int>& map);
mask_t kernel(const group_hom& hom);

struct quotient_result {
  finite_group group;          // G/H with labels "<repr>+H"
  std::vector<mask_t> cosets;  // canonical order; index = quotient element
  std::vector<int> projection;  // length |G|
};

// Pre: H a normal subgroup.
quotient_result quotient_group(const finite_group& g, mask_t h);

// All subgroups, canonical order. Pre: |G| <= caps().subgroup_order.
std::vector<mask_t> enumerate_subgroups(const finite_group& g);

// All group isomorphisms G -> H (generator-image backtracking); empty when
// none. Pre: orders <= caps().iso_order.
std::vector<std::vector<int>> group_isomorphisms(const finite_group& g,
                                                 const finite_group& h);
std::vector<std::vector<int>> automorphisms(const finite_group& g);

}  // namespace pretop
