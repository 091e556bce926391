#include "pretop/ptg.hpp"

#include <algorithm>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"
#include "pretop/setfam.hpp"

namespace pretop {

std::vector<mask_t> pretop_group::opens_at(int g) const {
  std::vector<mask_t> out;
  for (mask_t m : top.opens())
    if (has_bit(m, g)) out.push_back(m);
  return out;
}

pretop_group make_pretop_group(finite_group g, pretopology t) {
  if (!(g.universe == t.universe()))
    fail(errc::bad_input, "group and topology universes differ");
  if (auto v = is_pretopology(t.fam))
    fail(errc::bad_input, "family is not a pre-topology");
  return pretop_group{std::move(g), std::move(t)};
}

bool classification::flag(const std::string& name) const {
  if (name == "right_ptg") return right_ptg;
  if (name == "left_ptg") return left_ptg;
  if (name == "semi") return semi;
  if (name == "quasi") return quasi;
  if (name == "para") return para;
  if (name == "pretopological") return pretopological;
  if (name == "strongly") return strongly;
  if (name == "symmetrically") return symmetrically;
  if (name == "almost") return almost;
  if (name == "topological") return topological;
  fail(errc::bad_input, "unknown classification flag '" + name + "'");
}

namespace {

// Existence of opens U at x, V at y with UV inside W; shrinking preserves
// the inclusion, so atoms at x and y suffice.
bool box_at(const pretop_group& x, int a, int b, mask_t w,
            const std::vector<std::vector<mask_t>>& atoms) {
  for (mask_t u : atoms[a])
    for (mask_t v : atoms[b])
      if (subset_of(x.group.mul(u, v), w)) return true;
  return false;
}

}  // namespace

classification classify(const pretop_group& x) {
  classification c;
  const finite_group& g = x.group;
  const pretopology& t = x.top;
  int n = g.order();

  c.right_ptg = true;
  for (mask_t u : t.opens()) {
    for (int a = 0; a < n && c.right_ptg; ++a)
      if (!t.is_open(g.mul_right(u, a))) {
        c.right_ptg = false;
        c.witnesses["right_ptg"] = {{u}, {a}, "Ug not open"};
      }
    if (!c.right_ptg) break;
  }
  c.left_ptg = true;
  for (mask_t u : t.opens()) {
    for (int a = 0; a < n && c.left_ptg; ++a)
      if (!t.is_open(g.mul_left(a, u))) {
        c.left_ptg = false;
        c.witnesses["left_ptg"] = {{u}, {a}, "gU not open"};
      }
    if (!c.left_ptg) break;
  }
  c.semi = c.right_ptg && c.left_ptg;

  bool inverse_cont = true;
  for (mask_t u : t.opens())
    if (!t.is_open(g.set_inverse(u))) {
      inverse_cont = false;
      c.witnesses["quasi"] = {{u}, {}, "U^-1 not open"};
      break;
    }
  c.quasi = c.semi && inverse_cont;

  std::vector<std::vector<mask_t>> atoms(n);
  for (int p = 0; p < n; ++p) atoms[p] = atoms_at(t, p);

  c.para = true;
  for (mask_t w : t.opens()) {
    for (int a = 0; a < n && c.para; ++a)
      for (int b = 0; b < n && c.para; ++b) {
        if (!has_bit(w, g.op(a, b))) continue;
        if (!box_at(x, a, b, w, atoms)) {
          c.para = false;
          c.witnesses["para"] = {{w}, {a, b}, "no open box U x V with UV inside W"};
        }
      }
    if (!c.para) break;
  }
  c.pretopological = c.para && inverse_cont;
  if (!c.pretopological && !c.witnesses.count("pretopological")) {
    if (!c.para && c.witnesses.count("para"))
      c.witnesses["pretopological"] = c.witnesses["para"];
    else if (c.witnesses.count("quasi"))
      c.witnesses["pretopological"] = c.witnesses["quasi"];
  }

  int e = g.identity;
  c.strongly = true;
  for (mask_t u : t.opens()) {
    if (!has_bit(u, e)) continue;
    // shrinking V preserves V^2 inside U, so atoms at e decide this
    bool found = false;
    for (mask_t v : atoms[e])
      if (subset_of(g.mul(v, v), u)) {
        found = true;
        break;
      }
    if (!found) {
      c.strongly = false;
      c.witnesses["strongly"] = {{u}, {}, "no open V at e with V^2 inside U"};
      break;
    }
  }

  c.symmetrically = true;
  for (mask_t u : t.opens()) {
    if (!has_bit(u, e)) continue;
    bool found = false;
    for (mask_t v : t.opens())
      if (has_bit(v, e) && v == g.set_inverse(v) && subset_of(v, u)) {
        found = true;
        break;
      }
    if (!found) {
      c.symmetrically = false;
      c.witnesses["symmetrically"] = {{u}, {}, "no symmetric open V at e inside U"};
      break;
    }
  }
  c.almost = c.strongly && c.symmetrically;

  c.topological = c.pretopological;
  if (c.topological) {
    for (size_t i = 0; i < t.opens().size() && c.topological; ++i)
      for (size_t j = i + 1; j < t.opens().size(); ++j) {
        mask_t meet = t.opens()[i] & t.opens()[j];
        if (!t.is_open(meet)) {
          c.topological = false;
          c.witnesses["topological"] = {
              {t.opens()[i], t.opens()[j]}, {}, "intersection not open"};
          break;
        }
      }
  } else if (c.witnesses.count("pretopological")) {
    c.witnesses["topological"] = c.witnesses["pretopological"];
  }
  return c;
}

nbhd_axioms_result nbhd_axioms_report(const nbhd_system& sys) {
  const finite_group& g = sys.group;
  for (mask_t u : sys.members)
    if (!has_bit(u, g.identity))
      fail(errc::bad_input, "neighborhood system member misses the identity");
  nbhd_axioms_result r;
  r.product = r.inverse = r.translation = r.conjugation = true;
  for (mask_t u : sys.members) {
    bool ok = false;
    for (mask_t v : sys.members) {
      for (mask_t w : sys.members)
        if (subset_of(g.mul(v, w), u)) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok && r.product) {
      r.product = false;
      r.witnesses["product"] = {{u}, {}, "no members V, W with VW inside U"};
    }
    ok = false;
    for (mask_t v : sys.members)
      if (subset_of(g.set_inverse(v), u)) {
        ok = true;
        break;
      }
    if (!ok && r.inverse) {
      r.inverse = false;
      r.witnesses["inverse"] = {{u}, {}, "no member V with V^-1 inside U"};
    }
    for (int a : mask_elements(u)) {
      bool okt = false;
      for (mask_t v : sys.members)
        if (subset_of(g.mul_right(v, a), u)) {
          okt = true;
          break;
        }
      if (!okt && r.translation) {
        r.translation = false;
        r.witnesses["translation"] = {{u}, {a}, "no member V with Vg inside U"};
      }
    }
    for (int a = 0; a < g.order(); ++a) {
      bool okc = false;
      for (mask_t v : sys.members)
        if (subset_of(g.conjugate(a, v), u)) {
          okc = true;
          break;
        }
      if (!okc && r.conjugation) {
        r.conjugation = false;
        r.witnesses["conjugation"] = {{u}, {a}, "no member V with gVg^-1 inside U"};
      }
    }
  }
  return r;
}

pretop_group construct_from_nbhd_system(const nbhd_system& sys) {
  if (sys.members.empty())
    fail(errc::axioms_violated, "empty neighborhood system generates no cover");
  auto axioms = nbhd_axioms_report(sys);
  if (!axioms.all()) {
    std::string which;
    for (const char* name : {"product", "inverse", "translation", "conjugation"})
      if (axioms.witnesses.count(name)) which += std::string(which.empty() ? "" : ", ") + name;
    fail(errc::axioms_violated, "neighborhood axioms fail: " + which);
  }
  const finite_group& g = sys.group;
  std::vector<mask_t> translates;
  for (mask_t u : sys.members)
    for (int a = 0; a < g.order(); ++a) translates.push_back(g.mul_right(u, a));
  pretopology tau = union_close(g.universe, translates);

  // cross-check: tau equals {W : every x in W admits Ux inside W}
  mask_t count = g.universe.all();
  for (mask_t w = 0;; ++w) {
    bool in_tau2 = true;
    for (int p : mask_elements(w)) {
      bool ok = false;
      for (mask_t u : sys.members)
        if (subset_of(g.mul_right(u, p), w)) {
          ok = true;
          break;
        }
      if (!ok) {
        in_tau2 = false;
        break;
      }
    }
    if (in_tau2 != tau.is_open(w))
      throw std::logic_error("reconstruction postcondition failed");
    if (w == count) break;
  }
  return pretop_group{g, std::move(tau)};
}

finite_props_report check_finite_props(const pretop_group& x) {
  classification c = classify(x);
  if (!c.pretopological)
    fail(errc::not_pretop_group, "finite-property checks need a pretopological instance");
  finite_props_report rep;
  const finite_group& g = x.group;
  int e = g.identity;
  auto at_e = atoms_at(x.top, e);
  for (mask_t u : x.top.opens()) {
    if (!has_bit(u, e)) continue;
    bool found = false;
    for (mask_t v : x.top.opens())
      if (has_bit(v, e) && subset_of(g.mul(v, v), u)) {
        found = true;
        break;
      }
    if (!found) {
      rep.square_roots = false;
      rep.violation = witness_t{{u}, {}, "no square-root neighborhood"};
      return rep;
    }
  }
  for (mask_t a : at_e) {
    mask_t ai = g.set_inverse(a);
    if (std::find(at_e.begin(), at_e.end(), ai) == at_e.end()) {
      rep.atom_powers = false;
      rep.violation = witness_t{{a}, {}, "atom inverse is not an atom"};
      return rep;
    }
    for (int k = 2; k <= g.order(); ++k)
      if (g.pow_set(a, k) != a) {
        rep.atom_powers = false;
        rep.violation = witness_t{{a}, {k}, "atom power differs from the atom"};
        return rep;
      }
  }
  return rep;
}

bool almost_characterization(const pretop_group& x) {
  const finite_group& g = x.group;
  for (mask_t u : x.top.opens()) {
    if (!has_bit(u, g.identity)) continue;
    bool found = false;
    for (mask_t v : x.top.opens())
      if (has_bit(v, g.identity) &&
          subset_of(g.mul(v, g.set_inverse(v)), u)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

component_report component_of_identity(const pretop_group& x) {
  component_report rep;
  const finite_group& g = x.group;
  rep.component = component(x.top, g.identity);
  rep.is_subgroup = is_subgroup(g, rep.component);
  rep.is_closed = closure(x.top, rep.component) == rep.component;
  rep.is_invariant = true;
  for (int a = 0; a < g.order(); ++a)
    if (g.conjugate(a, rep.component) != rep.component) {
      rep.is_invariant = false;
      break;
    }
  if (rep.component == x.top.space()) {
    bool gen = true;
    for (mask_t u : x.top.opens()) {
      if (!has_bit(u, g.identity)) continue;
      mask_t sym = u | g.set_inverse(u);
      mask_t reach = sym;
      for (int k = 1; k < g.order() && reach != x.top.space(); ++k)
        reach = g.mul(reach, sym) | reach;
      if (reach != x.top.space()) {
        gen = false;
        break;
      }
    }
    rep.generation = gen;
  }
  return rep;
}

namespace {

// Least number of left translates of u covering everything: BFS over
// covered-set masks (orders are small).
int min_translate_cover(const finite_group& g, mask_t u) {
  int n = g.order();
  std::vector<mask_t> translates;
  for (int a = 0; a < n; ++a) translates.push_back(g.mul_left(a, u));
  mask_t target = g.universe.all();
  std::vector<int> dist(size_t{1} << n, -1);
  std::vector<mask_t> frontier = {0};
  dist[0] = 0;
  while (!frontier.empty()) {
    std::vector<mask_t> next;
    for (mask_t covered : frontier) {
      if (covered == target) return dist[covered];
      for (mask_t t : translates) {
        mask_t c2 = covered | t;
        if (dist[c2] < 0) {
          dist[c2] = dist[covered] + 1;
          next.push_back(c2);
        }
      }
    }
    frontier = std::move(next);
  }
  return n;  // unreachable: singleton translates always cover
}

}  // namespace

int covering_index(const pretop_group& x) {
  classification c = classify(x);
  if (!c.pretopological)
    fail(errc::not_pretop_group, "covering index needs a pretopological instance");
  int best = 0;
  for (mask_t u : atoms_at(x.top, x.group.identity))
    best = std::max(best, min_translate_cover(x.group, u));
  return best;
}

bool discrete_open_family(const pretopology& top, const std::vector<mask_t>& fam) {
  for (int p = 0; p < top.points(); ++p) {
    bool ok = false;
    for (mask_t w : top.opens()) {
      if (!has_bit(w, p)) continue;
      int met = 0;
      for (mask_t m : fam)
        if ((w & m) != 0) ++met;
      if (met <= 1) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

pretopology coreflexion_topology(const pretop_group& x) {
  // Intersection of all opens at e; unions of its right cosets refine the
  // pre-topology and form the coarsest group topology doing so.
  mask_t k = x.top.space();
  for (mask_t u : x.top.opens())
    if (has_bit(u, x.group.identity)) k &= u;
  std::vector<mask_t> gens;
  for (int a = 0; a < x.group.order(); ++a) gens.push_back(x.group.mul_right(k, a));
  return union_close(x.group.universe, gens);
}

std::vector<subgroup_record> discrete_subgroup_report(const pretop_group& x) {
  const finite_group& g = x.group;
  classification cls = classify(x);
  pretopology coreflex = coreflexion_topology(x);
  std::vector<subgroup_record> out;
  for (mask_t h : enumerate_subgroups(g)) {
    subgroup_record rec;
    rec.subgroup = h;
    pretopology trace = subspace(x.top, h);
    rec.discrete = static_cast<std::uint64_t>(trace.opens().size()) ==
                   (std::uint64_t{1} << popcount(h));
    rec.closed = closure(x.top, h) == h;
    rec.open = x.top.is_open(h);
    rec.open_implies_closed = !rec.open || rec.closed;
    rec.closed_in_coreflexion = closure(coreflex, h) == h;
    if (cls.almost && rec.discrete) {
      // find U with U n H = {e}, then symmetric V with V^4 inside U
      bool checked = false;
      for (mask_t u : x.top.opens()) {
        if (!has_bit(u, g.identity) || (u & h) != (mask_t{1} << g.identity))
          continue;
        for (mask_t v : x.top.opens()) {
          if (!has_bit(v, g.identity) || v != g.set_inverse(v)) continue;
          if (!subset_of(g.pow_set(v, 4), u)) continue;
          std::vector<mask_t> fam;
          for (int a : mask_elements(h)) fam.push_back(g.mul_left(a, v));
          rec.disjoint_family_discrete = discrete_open_family(x.top, fam);
          checked = true;
          break;
        }
        if (checked) break;
      }
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace pretop
