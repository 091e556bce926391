#pragma once

#include <optional>
#include <vector>

#include "pretop/dyadic.hpp"
#include "pretop/ptg.hpp"

namespace pretop {

// N(e)=0, N(xy) <= N(x)+N(y), N(x^-1)=N(x); values exact dyadics.
struct prenorm_t {
  finite_group group;
  std::vector<dyadic> values;

  dyadic at(int x) const { return values[x]; }
};

// U_0, ..., U_k: symmetric opens containing e, U_{n+1}^2 inside U_n, and the
// terminal set idempotent (U_k U_k = U_k); finite groups always stabilize.
struct nbhd_chain {
  std::vector<mask_t> sets;
  int depth() const { return static_cast<int>(sets.size()) - 1; }
};

struct pseudometric_t {
  finite_group group;
  std::vector<std::vector<dyadic>> values;
  bool left_invariant = false;
  bool right_invariant = false;
};

// Greedy chain inside U: each step the largest symmetric open V with
// V^2 inside the previous set (canonical tie-break), run to stabilization.
// Pre: instance almost topological, U open containing e.
nbhd_chain build_chain(const pretop_group& x, mask_t u, int depth = 64);

// Step cost 0 on the stabilized core, 1/2^m at level m, 2 outside U_0;
// N = single-source min-plus shortest path from e. Satisfies the prenorm
// axioms and {N < 1/2^n} in U_n in {N <= 2/2^n} for all n <= depth.
prenorm_t construct_prenorm(const pretop_group& x, const nbhd_chain& chain);

mask_t ball(const prenorm_t& n, dyadic eps);  // strict sublevel set

// Every positive value eps of N admits an open U at e inside B_N(eps).
bool is_precontinuous_prenorm(const pretop_group& x, const prenorm_t& n);

// Chain + prenorm with the unit ball inside U. Pre: almost topological.
prenorm_t markov_separation(const pretop_group& x, mask_t u);

struct pseudometric_pair {
  pseudometric_t right;  // rho(x,y) = N(x y^-1), right-invariant
  pseudometric_t left;   // sigma(x,y) = N(x^-1 y), left-invariant
};

pseudometric_pair pseudometrics_from(const pretop_group& x, const prenorm_t& n);

// Balls of the atom-derived prenorms form a local pre-base at e.
bool ball_prebase_check(const pretop_group& x);

// For every point z and nonempty closed C avoiding z, the clamped value
// table min(N(x z^-1), 1) of a prenorm separating e from the complement
// translate is a pre-continuous level function with value 0 at z and 1 on C.
// Constructive route to complete regularity on almost instances.
bool markov_functional_separation(const pretop_group& x);

// Same construction, every chain member conjugation-invariant; the result
// additionally satisfies N(xyx^-1) = N(y). Throws NotInvariantChain with the
// witnessing (g, level) otherwise.
prenorm_t invariant_prenorm(const pretop_group& x, const nbhd_chain& chain);

struct prenorm_quotient_result {
  mask_t kernel_set = 0;       // Z = {N = 0}, equals the chain intersection
  pretop_group quotient;       // H = G/Z, topology from the ball images
  prenorm_t quotient_prenorm;  // N_H(pi(a)) = N(a), well-definedness checked
  classification cls;          // almost topological expected
  bool prenorm_precontinuous = false;
};

// Pre: instance almost topological and abelian, or the chain invariant
// (so Z is normal).
prenorm_quotient_result prenorm_quotient(const pretop_group& x,
                                         const nbhd_chain& chain);

}  // namespace pretop
