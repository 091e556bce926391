#include "pretop/explore.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"
#include "pretop/io.hpp"
#include "pretop/prenorm.hpp"
#include "pretop/quotient.hpp"
#include "pretop/separation.hpp"

namespace pretop {

// ---------------------------------------------------------------------------
// pre-topology enumeration
// ---------------------------------------------------------------------------

namespace {

universe_t point_universe(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return universe_t(std::move(labels));
}

// DFS over subsets in ascending mask order: a union of chosen members is
// numerically above both, so forced members are discovered before their turn.
struct family_dfs {
  mask_t full;
  std::vector<int> required;
  std::vector<mask_t> members;
  std::uint64_t count = 0;
  const std::function<void(const pretopology&)>* sink = nullptr;
  universe_t universe;

  void emit() {
    ++count;
    if (sink && *sink) {
      std::vector<mask_t> ms = members;
      ms.push_back(0);
      (*sink)(pretopology{set_family(universe, std::move(ms))});
    }
  }

  std::vector<mask_t> mark_unions(mask_t s) {
    std::vector<mask_t> marked;
    for (mask_t t : members) {
      mask_t u = s | t;
      if (u != s && u != t) {
        ++required[u];
        marked.push_back(u);
      }
    }
    return marked;
  }

  void rec(mask_t s) {
    if (s == full) {  // the full set is always a member
      members.push_back(full);
      emit();
      members.pop_back();
      return;
    }
    if (required[s] == 0) rec(s + 1);  // exclude s
    auto marked = mark_unions(s);      // include s
    members.push_back(s);
    rec(s + 1);
    members.pop_back();
    for (mask_t u : marked) --required[u];
  }
};

}  // namespace

std::uint64_t enumerate_pretopologies(
    int n, const std::function<void(const pretopology&)>& sink) {
  if (n < 1 || n > caps().enum_points)
    fail(errc::cap_exceeded, "pre-topology enumeration needs 1 <= n <= " +
                                 std::to_string(caps().enum_points));
  family_dfs dfs;
  dfs.full = full_mask(n);
  dfs.required.assign(size_t{1} << n, 0);
  dfs.sink = &sink;
  dfs.universe = point_universe(n);
  dfs.rec(1);
  return dfs.count;
}

std::uint64_t enumerate_pretopologies_oracle(int n) {
  if (n < 1 || n > 4) fail(errc::cap_exceeded, "oracle covers n <= 4");
  mask_t full = full_mask(n);
  int proper = (1 << n) - 2;
  std::uint64_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper); ++pick) {
    std::vector<mask_t> fam = {0, full};
    for (int i = 0; i < proper; ++i)
      if ((pick >> i) & 1) fam.push_back(static_cast<mask_t>(i + 1));
    bool closed = true;
    for (size_t i = 0; i < fam.size() && closed; ++i)
      for (size_t j = i + 1; j < fam.size() && closed; ++j)
        closed = std::find(fam.begin(), fam.end(), fam[i] | fam[j]) != fam.end();
    if (closed) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// group pre-topology enumeration
// ---------------------------------------------------------------------------

namespace {

void antichains(const std::vector<mask_t>& pool, size_t idx,
                std::vector<mask_t>& chosen,
                const std::function<void(const std::vector<mask_t>&)>& emit) {
  if (idx == pool.size()) {
    if (!chosen.empty()) emit(chosen);
    return;
  }
  antichains(pool, idx + 1, chosen, emit);
  for (mask_t c : chosen)
    if (subset_of(c, pool[idx]) || subset_of(pool[idx], c)) return;
  chosen.push_back(pool[idx]);
  antichains(pool, idx + 1, chosen, emit);
  chosen.pop_back();
}

bool passes_filter(const classification& c, const std::string& filter) {
  std::stringstream ss(filter);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    bool negate = token[0] == '!';
    std::string name = negate ? token.substr(1) : token;
    if (c.flag(name) == negate) return false;
  }
  return true;
}

std::string serialize_family(const std::vector<mask_t>& members) {
  std::string out;
  for (mask_t m : members) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx;",
                  static_cast<unsigned long long>(m));
    out += buf;
  }
  return out;
}

}  // namespace

std::vector<enumerated_instance> enumerate_group_pretopologies(
    const finite_group& g, const std::string& filter, bool automorphism_dedup,
    enum_strategy strategy, int jobs) {
  int cap = filter.empty() ? caps().enum_order_full : caps().enum_order_filtered;
  if (g.order() > cap)
    fail(errc::cap_exceeded, "group pre-topology enumeration needs |G| <= " +
                                 std::to_string(cap));
  if (strategy == enum_strategy::automatic)
    strategy = g.order() <= 6 ? enum_strategy::generic : enum_strategy::subgroups;

  // Candidate pool for the neighborhood systems at e. Atoms at e of any
  // instance are open subgroups, so subgroup antichains already reach every
  // instance; the generic pool keeps the low orders assumption-free.
  std::vector<mask_t> pool;
  if (strategy == enum_strategy::generic) {
    for (mask_t m = 0; m <= g.universe.all(); ++m)
      if (has_bit(m, g.identity)) pool.push_back(m);
  } else {
    pool = enumerate_subgroups(g);
  }
  std::sort(pool.begin(), pool.end(), canonical_mask_less);

  std::vector<std::vector<mask_t>> candidates;
  std::vector<mask_t> chosen;
  antichains(pool, 0, chosen,
             [&](const std::vector<mask_t>& c) { candidates.push_back(c); });

  jobs = std::max(1, jobs);
  using found_t = std::vector<std::pair<std::vector<mask_t>, std::vector<mask_t>>>;
  auto evaluate = [&](size_t lo, size_t hi) {
    found_t found;
    for (size_t i = lo; i < hi; ++i) {
      nbhd_system sys{g, candidates[i]};
      if (!nbhd_axioms_report(sys).all()) continue;
      pretop_group inst = construct_from_nbhd_system(sys);
      found.emplace_back(inst.top.fam.members, candidates[i]);
    }
    return found;
  };
  found_t raw;
  if (jobs == 1 || candidates.size() < 64) {
    raw = evaluate(0, candidates.size());
  } else {
    std::vector<std::future<found_t>> futures;
    size_t chunk = (candidates.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      size_t lo = std::min(candidates.size(), static_cast<size_t>(j) * chunk);
      size_t hi = std::min(candidates.size(), static_cast<size_t>(j + 1) * chunk);
      futures.push_back(std::async(std::launch::async, evaluate, lo, hi));
    }
    for (auto& f : futures) {
      found_t part = f.get();
      raw.insert(raw.end(), part.begin(), part.end());
    }
  }

  // dedup by resulting topology; the map key fixes the canonical order
  std::map<std::string, std::pair<std::vector<mask_t>, std::vector<mask_t>>> unique;
  for (auto& entry : raw)
    unique.emplace(serialize_family(entry.first), entry);

  found_t kept;
  if (automorphism_dedup) {
    auto autos = automorphisms(g);
    for (auto& [key, value] : unique) {
      std::string canonical = key;
      for (const auto& phi : autos) {
        std::vector<mask_t> moved;
        for (mask_t m : value.first) {
          mask_t img = 0;
          for (int p : mask_elements(m)) img |= mask_t{1} << phi[p];
          moved.push_back(img);
        }
        std::sort(moved.begin(), moved.end(), canonical_mask_less);
        canonical = std::min(canonical, serialize_family(moved));
      }
      // every orbit contains its canonical form, so keep exactly that one
      if (key == canonical) kept.push_back(value);
    }
  } else {
    for (auto& [key, value] : unique) kept.push_back(value);
  }

  std::vector<enumerated_instance> out;
  int index = 0;
  for (auto& [members, system] : kept) {
    enumerated_instance inst;
    inst.instance = pretop_group{g, pretopology{set_family(g.universe, members)}};
    inst.system = system;
    inst.name = g.name + "#" + std::to_string(index++);
    inst.cls = classify(inst.instance);
    if (!filter.empty() && !passes_filter(inst.cls, filter)) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// theorem registry
// ---------------------------------------------------------------------------

namespace {

using check_fn = std::function<std::optional<std::string>(const enumerated_instance&)>;

std::string label_set(const finite_group& g, mask_t m) {
  std::string out = "{";
  bool first = true;
  for (int p : mask_elements(m)) {
    if (!first) out += ",";
    out += g.universe.label(p);
    first = false;
  }
  return out + "}";
}

bool inverse_precontinuous(const pretop_group& x) {
  for (mask_t u : x.top.opens())
    if (!x.top.is_open(x.group.set_inverse(u))) return false;
  return true;
}

std::optional<std::string> pass() { return std::string(); }
std::optional<std::string> skip() { return std::nullopt; }

// Existence of an open V at e with V x V inside U, for every x and open U
// containing x (hypothesis of the center theorem).
bool vxv_condition(const pretop_group& x) {
  const finite_group& g = x.group;
  for (mask_t u : x.top.opens())
    for (int p : mask_elements(u)) {
      bool found = false;
      for (mask_t v : x.top.opens()) {
        if (!has_bit(v, g.identity)) continue;
        if (subset_of(g.mul(g.mul_right(v, p), v), u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

std::vector<theorem_record> default_registry() {
  std::vector<theorem_record> reg;
  auto add = [&](const std::string& id, const std::string& statement,
                 check_fn check, bool experimental = false) {
    reg.push_back(theorem_record{id, statement, experimental, std::move(check)});
  };

  add("t0-implies-regular",
      "every T0 instance with pre-continuous multiplication and inversion is regular",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        separation_report_t sep = separation_report(e.instance.top);
        if (sep.t0 && !sep.regular) return "T0 holds but regularity fails";
        return pass();
      });

  add("open-subgroup-closed",
      "open subgroups of one-sided translation-continuous instances are closed",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.right_ptg && !e.cls.left_ptg) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group))
          if (e.instance.top.is_open(h) && closure(e.instance.top, h) != h)
            return "open subgroup " + label_set(e.instance.group, h) + " is not closed";
        return pass();
      });

  add("finite-square-roots",
      "every identity neighborhood of a finite instance contains an open V with V^2 inside it",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        finite_props_report rep = check_finite_props(e.instance);
        if (!rep.square_roots) return rep.violation->note;
        return pass();
      });

  add("finite-atom-powers",
      "identity atoms of finite instances have atom inverses and idempotent powers",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        finite_props_report rep = check_finite_props(e.instance);
        if (!rep.atom_powers) return rep.violation->note;
        return pass();
      });

  add("finite-para-implies-almost",
      "finite instances with jointly pre-continuous multiplication are almost topological",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.para) return skip();
        if (!e.cls.pretopological || !e.cls.strongly || !e.cls.symmetrically)
          return "para instance misses the almost topological flags";
        return pass();
      });

  add("subgroup-closure-is-subgroup",
      "in quasi instances the closure of a subgroup is a subgroup",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.quasi) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group))
          if (!is_subgroup(e.instance.group, closure(e.instance.top, h)))
            return "closure of " + label_set(e.instance.group, h) + " not a subgroup";
        return pass();
      });

  add("symmetric-closure-symmetric",
      "pre-continuous inversion keeps closures of symmetric sets symmetric",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!inverse_precontinuous(e.instance)) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t a = 0; a <= e.instance.top.space(); ++a) {
          if (g.set_inverse(a) != a) continue;
          mask_t cl = closure(e.instance.top, a);
          if (g.set_inverse(cl) != cl)
            return "closure of symmetric " + label_set(g, a) + " not symmetric";
        }
        return pass();
      });

  add("closure-inside-AU",
      "in quasi instances closure(A) lies in AU for open U at e, and equals the "
      "intersection over identity atoms",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.quasi) return skip();
        const finite_group& g = e.instance.group;
        auto at_e = atoms_at(e.instance.top, g.identity);
        for (mask_t a = 0; a <= e.instance.top.space(); ++a) {
          mask_t cl = closure(e.instance.top, a);
          mask_t meet = e.instance.top.space();
          for (mask_t u : e.instance.top.opens()) {
            if (!has_bit(u, g.identity)) continue;
            if (!subset_of(cl, g.mul(a, u)))
              return "closure of " + label_set(g, a) + " escapes AU";
          }
          for (mask_t u : at_e) meet &= g.mul(a, u);
          if (cl != meet)
            return "closure of " + label_set(g, a) + " differs from the AU intersection";
        }
        return pass();
      });

  add("quotient-projection-open",
      "coset projections of semi instances are open with translate pre-bases; "
      "closed subgroups give T1 coset spaces",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.semi) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group)) {
          quotient_space q = coset_space(e.instance, h);
          if (!q.checks.pi_open)
            return "projection by " + label_set(e.instance.group, h) + " is not open";
          if (!q.checks.translate_prebase)
            return "translate images by " + label_set(e.instance.group, h) +
                   " fail to form local pre-bases";
          if (q.checks.t1 && !*q.checks.t1)
            return "coset space by closed " + label_set(e.instance.group, h) +
                   " is not T1";
        }
        return pass();
      });

  add("quotient-discrete-iff-open",
      "a coset space is discrete exactly when the subgroup is open",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.semi) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group))
          if (!discrete_iff_open_check(e.instance, h))
            return "discreteness mismatch at " + label_set(e.instance.group, h);
        return pass();
      });

  add("quotient-space-regular",
      "coset spaces by closed subgroups are regular, with the projection "
      "closure sandwich",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t h : enumerate_subgroups(e.instance.group)) {
          if (closure(e.instance.top, h) != h) continue;
          quotient_space q = coset_space(e.instance, h);
          if (!is_regular(q.top))
            return "coset space by " + label_set(g, h) + " is not regular";
          auto at_e = e.instance.opens_at(g.identity);
          auto image = [&](mask_t s) {
            mask_t img = 0;
            for (int p : mask_elements(s)) img |= mask_t{1} << q.projection[p];
            return img;
          };
          for (mask_t u : at_e)
            for (mask_t v : at_e)
              for (mask_t w : at_e) {
                if (!subset_of(g.mul(w, v), u)) continue;
                if (!subset_of(closure(q.top, image(v)), image(u)))
                  return "projection closure sandwich fails at " + label_set(g, h);
              }
        }
        return pass();
      });

  add("quotient-group-pretopological",
      "quotients by closed normal subgroups stay pretopological and regular",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group)) {
          if (closure(e.instance.top, h) != h) continue;
          if (!is_normal(e.instance.group, h)) continue;
          quotient_group_result q = quotient_group_pretop(e.instance, h);
          if (!q.cls.pretopological)
            return "quotient by " + label_set(e.instance.group, h) +
                   " is not pretopological";
          if (!q.separation.regular)
            return "quotient by " + label_set(e.instance.group, h) + " is not regular";
          if (!q.sandwich_ok)
            return "quotient sandwich fails at " + label_set(e.instance.group, h);
        }
        return pass();
      });

  add("first-isomorphism",
      "the canonical projection induces a pre-topological isomorphism from the "
      "kernel quotient",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        for (mask_t h : enumerate_subgroups(e.instance.group)) {
          if (closure(e.instance.top, h) != h) continue;
          if (!is_normal(e.instance.group, h)) continue;
          quotient_group_result q = quotient_group_pretop(e.instance, h);
          group_hom p{&e.instance.group, &q.quotient.group, q.projection};
          first_iso_report rep = first_isomorphism_check(p, e.instance, q.quotient);
          if (!rep.ok)
            return "first isomorphism fails at " + label_set(e.instance.group, h) +
                   ": " + rep.detail;
        }
        return pass();
      });

  add("second-isomorphism",
      "G/G0, H/H0 and (G/N)/(G0/N) agree for open projections and closed "
      "invariant H0",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t n : enumerate_subgroups(g)) {
          if (closure(e.instance.top, n) != n || !is_normal(g, n)) continue;
          quotient_group_result hq = quotient_group_pretop(e.instance, n);
          for (mask_t h0 : enumerate_subgroups(hq.quotient.group)) {
            if (closure(hq.quotient.top, h0) != h0) continue;
            if (!is_normal(hq.quotient.group, h0)) continue;
            mask_t g0 = 0;
            for (int p = 0; p < g.order(); ++p)
              if (has_bit(h0, hq.projection[p])) g0 |= mask_t{1} << p;
            if (closure(e.instance.top, g0) != g0 || !is_normal(g, g0)) {
              return "preimage subgroup not closed normal at " + label_set(g, n);
            }
            quotient_group_result q1 = quotient_group_pretop(e.instance, g0);
            quotient_group_result q2 = quotient_group_pretop(hq.quotient, h0);
            if (!isomorphic(q1.quotient, q2.quotient))
              return "G/G0 differs from (G/N)/(G0/N) at N=" + label_set(g, n) +
                     ", G0=" + label_set(g, g0);
          }
        }
        return pass();
      });

  add("third-isomorphism",
      "MH/H matches the projected subgroup inside G/H",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t h : enumerate_subgroups(g)) {
          if (closure(e.instance.top, h) != h || !is_normal(g, h)) continue;
          quotient_group_result hq = quotient_group_pretop(e.instance, h);
          for (mask_t m : enumerate_subgroups(g)) {
            mask_t mh = g.mul(m, h);
            pretop_group a = subgroup_instance(e.instance, mh);
            mask_t h_local = 0;
            {
              auto points = mask_elements(mh);
              for (size_t i = 0; i < points.size(); ++i)
                if (has_bit(h, points[i])) h_local |= mask_t{1} << i;
            }
            quotient_group_result left = quotient_group_pretop(a, h_local);
            mask_t pim = 0;
            for (int p : mask_elements(m)) pim |= mask_t{1} << hq.projection[p];
            pretop_group right = subgroup_instance(hq.quotient, pim);
            if (!isomorphic(left.quotient, right))
              return "MH/H mismatch at H=" + label_set(g, h) + ", M=" + label_set(g, m);
          }
        }
        return pass();
      });

  add("reconstruction-roundtrip",
      "identity neighborhoods of an instance regenerate its pre-topology",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        nbhd_system sys{e.instance.group,
                        e.instance.opens_at(e.instance.group.identity)};
        if (!nbhd_axioms_report(sys).all())
          return "identity neighborhoods fail the generation axioms";
        pretop_group rebuilt = construct_from_nbhd_system(sys);
        if (!(rebuilt.top.fam == e.instance.top.fam))
          return "regenerated topology differs";
        return pass();
      });

  add("almost-iff-vv-inverse",
      "the almost topological flags match the VV^-1 neighborhood criterion",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        if (almost_characterization(e.instance) != e.cls.almost)
          return "VV^-1 criterion disagrees with the almost flags";
        return pass();
      });

  add("almost-completely-regular",
      "almost topological instances separate points from closed sets by "
      "pre-continuous functions",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        if (!functionally_separated_all_pairs(e.instance.top))
          return "a point/closed-set pair admits no separating function";
        return pass();
      });

  add("markov-unit-ball",
      "every identity neighborhood admits a pre-continuous prenorm with unit "
      "ball inside it, giving the constructive separation",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t u : e.instance.opens_at(g.identity)) {
          prenorm_t n = markov_separation(e.instance, u);
          if (!subset_of(ball(n, dyadic::whole(1)), u))
            return "unit ball escapes " + label_set(g, u);
          if (!is_precontinuous_prenorm(e.instance, n))
            return "separating prenorm not pre-continuous at " + label_set(g, u);
        }
        if (!markov_functional_separation(e.instance))
          return "constructive level functions fail";
        return pass();
      });

  add("component-closed-invariant-subgroup",
      "the identity component is a closed invariant subgroup",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        if (e.instance.order() > caps().component_points) return skip();
        component_report rep = component_of_identity(e.instance);
        if (!rep.is_subgroup || !rep.is_closed || !rep.is_invariant)
          return "identity component " +
                 label_set(e.instance.group, rep.component) +
                 " is not a closed invariant subgroup";
        return pass();
      });

  add("connected-generation",
      "connected instances are generated by any identity neighborhood",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        if (!is_connected(e.instance.top, e.instance.top.space())) return skip();
        const finite_group& g = e.instance.group;
        for (mask_t u : e.instance.opens_at(g.identity)) {
          mask_t sym = u | g.set_inverse(u);
          mask_t reach = sym;
          for (int k = 1; k < g.order() && reach != e.instance.top.space(); ++k)
            reach |= g.mul(reach, sym);
          if (reach != e.instance.top.space())
            return "neighborhood " + label_set(g, u) + " does not generate";
        }
        return pass();
      });

  add("center-discrete-invariant",
      "discrete invariant subgroups of connected instances with the VxV "
      "property lie in the center",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        if (!is_connected(e.instance.top, e.instance.top.space())) return skip();
        if (!vxv_condition(e.instance)) return skip();
        const finite_group& g = e.instance.group;
        mask_t center = g.center();
        bool any = false;
        for (const subgroup_record& rec : discrete_subgroup_report(e.instance)) {
          if (!rec.discrete || !is_normal(g, rec.subgroup)) continue;
          any = true;
          if (!subset_of(rec.subgroup, center))
            return "discrete invariant " + label_set(g, rec.subgroup) +
                   " escapes the center";
        }
        return any ? pass() : skip();
      });

  add("u-disjoint-discrete-family",
      "translates of a symmetric V with V^4 inside U over a U-disjoint set "
      "form a discrete family",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        const finite_group& g = e.instance.group;
        int n = g.order();
        for (mask_t v : e.instance.opens_at(g.identity)) {
          if (g.set_inverse(v) != v) continue;
          mask_t v4 = g.pow_set(v, 4);
          // growing U only shrinks the collection of U-disjoint sets while
          // the conclusion stays the same, so minimal opens above V^4 decide
          std::vector<mask_t> above;
          for (mask_t u : e.instance.opens_at(g.identity))
            if (subset_of(v4, u)) above.push_back(u);
          std::vector<mask_t> minimal_above;
          for (mask_t u : above) {
            bool minimal = true;
            for (mask_t other : above)
              if (other != u && subset_of(other, u)) {
                minimal = false;
                break;
              }
            if (minimal) minimal_above.push_back(u);
          }
          for (mask_t u : minimal_above) {
            // coexistable pairs within a U-disjoint set
            auto u_disjoint = [&](mask_t b) {
              for (int a1 : mask_elements(b))
                for (int b1 : mask_elements(b))
                  if (a1 != b1 && has_bit(g.mul_left(a1, u), b1)) return false;
              return true;
            };
            for (mask_t b = 0; b < (mask_t{1} << n); ++b) {
              if (popcount(b) < 2 || !u_disjoint(b)) continue;
              std::vector<mask_t> fam;
              for (int a : mask_elements(b)) fam.push_back(g.mul_left(a, v));
              if (!discrete_open_family(e.instance.top, fam))
                return "family over " + label_set(g, b) + " with V=" +
                       label_set(g, v) + " is not discrete";
            }
          }
        }
        return pass();
      });

  add("dense-subgroup-restriction-open",
      "restricting the projection to a dense subgroup stays an open map onto "
      "its image",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        const finite_group& g = e.instance.group;
        bool any = false;
        for (mask_t h : enumerate_subgroups(g)) {
          if (closure(e.instance.top, h) != h) continue;
          quotient_space q = coset_space(e.instance, h);
          for (mask_t k : enumerate_subgroups(g)) {
            if (closure(e.instance.top, k) != e.instance.top.space()) continue;
            any = true;
            mask_t pik = 0;
            for (int p : mask_elements(k)) pik |= mask_t{1} << q.projection[p];
            for (mask_t o : e.instance.top.opens()) {
              mask_t trace = o & k;
              mask_t img = 0;
              for (int p : mask_elements(trace)) img |= mask_t{1} << q.projection[p];
              bool relatively_open = false;
              for (mask_t w : q.top.opens())
                if ((w & pik) == img) {
                  relatively_open = true;
                  break;
                }
              if (!relatively_open)
                return "restricted image not open at H=" + label_set(g, h) +
                       ", K=" + label_set(g, k);
            }
          }
        }
        return any ? pass() : skip();
      });

  add("resolvable-with-dense-subgroup",
      "a proper dense subgroup forces resolvability",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        bool any = false;
        for (mask_t h : enumerate_subgroups(e.instance.group)) {
          if (h == e.instance.top.space()) continue;
          if (closure(e.instance.top, h) == e.instance.top.space()) any = true;
        }
        if (!any) return skip();
        if (!resolvable_witness(e.instance.top))
          return "no disjoint dense pair despite a proper dense subgroup";
        return pass();
      });

  add("resolvable-with-nonclosed-subgroup",
      "a non-closed subgroup forces resolvability",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        bool any = false;
        for (mask_t h : enumerate_subgroups(e.instance.group))
          if (closure(e.instance.top, h) != h) any = true;
        if (!any) return skip();
        if (!resolvable_witness(e.instance.top))
          return "no disjoint dense pair despite a non-closed subgroup";
        return pass();
      });

  add("ball-prebase",
      "balls of the atom prenorms form a local pre-base at the identity",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        if (!ball_prebase_check(e.instance)) return "balls miss an identity atom";
        return pass();
      });

  add("covering-index-vs-cellularity",
      "the covering index stays below the cellularity on almost instances "
      "(finite reading of a cardinal inequality; violations are findings)",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological || !e.cls.almost) return skip();
        int ib = covering_index(e.instance);
        cardinal_report card = cardinals(e.instance.top);
        if (ib > card.cellularity)
          return "covering index " + std::to_string(ib) + " exceeds cellularity " +
                 std::to_string(card.cellularity);
        return pass();
      },
      /*experimental=*/true);

  add("discrete-subgroup-closed-in-coreflexion",
      "discrete subgroups close up in the coarsest refining group topology "
      "(fails on indiscrete instances; tracked as a finding)",
      [](const enumerated_instance& e) -> std::optional<std::string> {
        if (!e.cls.pretopological) return skip();
        for (const subgroup_record& rec : discrete_subgroup_report(e.instance))
          if (rec.discrete && !rec.closed_in_coreflexion)
            return "discrete " + label_set(e.instance.group, rec.subgroup) +
                   " not closed in the co-reflexion topology";
        return pass();
      },
      /*experimental=*/true);

  return reg;
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

namespace {

suite_witness make_witness(const std::string& theorem,
                           const enumerated_instance& inst,
                           const std::string& detail) {
  suite_witness w;
  w.theorem_id = theorem;
  w.group_name = inst.instance.group.name;
  for (mask_t m : inst.instance.top.opens())
    w.family.push_back(inst.instance.group.universe.mask_labels(m));
  w.detail = detail;
  return w;
}

}  // namespace

std::vector<enumerated_instance> suite_instances(int order_lo, int order_hi,
                                                 bool automorphism_dedup,
                                                 int jobs) {
  std::vector<enumerated_instance> out;
  for (int order = order_lo; order <= order_hi; ++order)
    for (const finite_group& g : groups_of_order(order))
      for (auto& inst : enumerate_group_pretopologies(
               g, "", automorphism_dedup, enum_strategy::automatic, jobs))
        out.push_back(std::move(inst));
  // fixtures join the stream when their order is covered
  if (order_lo <= 4 && 4 <= order_hi) {
    enumerated_instance p4;
    p4.instance = *fixture("P4");
    p4.name = "P4";
    p4.cls = classify(p4.instance);
    out.push_back(std::move(p4));
  }
  if (order_lo <= 6 && 6 <= order_hi) {
    enumerated_instance p6;
    p6.instance = *fixture("P6");
    p6.name = "P6";
    p6.cls = classify(p6.instance);
    out.push_back(std::move(p6));
  }
  return out;
}

suite_report run_theorem_suite(const std::vector<enumerated_instance>& instances,
                               const std::vector<theorem_record>& registry,
                               int jobs) {
  suite_report report;
  report.certificate.instances = static_cast<int>(instances.size());

  struct cell {
    int pass = 0, skip = 0;
    std::vector<suite_witness> violations;
  };
  jobs = std::max(1, jobs);
  auto evaluate = [&](size_t lo, size_t hi) {
    std::vector<cell> cells(registry.size());
    for (size_t i = lo; i < hi; ++i)
      for (size_t t = 0; t < registry.size(); ++t) {
        std::optional<std::string> verdict;
        try {
          verdict = registry[t].check(instances[i]);
        } catch (const error& err) {
          if (err.code() == errc::cap_exceeded) {
            ++cells[t].skip;
            continue;
          }
          verdict = std::string("checker error: ") + err.what();
        }
        if (!verdict) {
          ++cells[t].skip;
        } else if (verdict->empty()) {
          ++cells[t].pass;
        } else {
          cells[t].violations.push_back(
              make_witness(registry[t].id, instances[i],
                           instances[i].name + ": " + *verdict));
        }
      }
    return cells;
  };

  std::vector<cell> totals(registry.size());
  auto merge = [&](const std::vector<cell>& cells) {
    for (size_t t = 0; t < registry.size(); ++t) {
      totals[t].pass += cells[t].pass;
      totals[t].skip += cells[t].skip;
      totals[t].violations.insert(totals[t].violations.end(),
                                  cells[t].violations.begin(),
                                  cells[t].violations.end());
    }
  };
  if (jobs == 1 || instances.size() < 8) {
    merge(evaluate(0, instances.size()));
  } else {
    std::vector<std::future<std::vector<cell>>> futures;
    size_t chunk = (instances.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      size_t lo = std::min(instances.size(), static_cast<size_t>(j) * chunk);
      size_t hi = std::min(instances.size(), static_cast<size_t>(j + 1) * chunk);
      futures.push_back(std::async(std::launch::async, evaluate, lo, hi));
    }
    for (auto& f : futures) merge(f.get());
  }

  std::set<std::string> group_names;
  int lo = 0, hi = 0;
  for (const auto& inst : instances) {
    group_names.insert(inst.instance.group.name);
    int n = inst.instance.order();
    lo = lo == 0 ? n : std::min(lo, n);
    hi = std::max(hi, n);
  }
  report.certificate.order_lo = lo;
  report.certificate.order_hi = hi;
  report.certificate.groups = static_cast<int>(group_names.size());

  for (size_t t = 0; t < registry.size(); ++t) {
    theorem_outcome outcome;
    outcome.id = registry[t].id;
    outcome.experimental = registry[t].experimental;
    outcome.pass = totals[t].pass;
    outcome.skip = totals[t].skip;
    outcome.violations = std::move(totals[t].violations);
    if (!outcome.violations.empty()) {
      if (registry[t].experimental) {
        for (const auto& v : outcome.violations)
          report.findings.push_back(
              finding_t{"experimental", registry[t].id, v.detail});
      } else {
        report.proven_violation = true;
      }
    }
    report.theorems.push_back(std::move(outcome));
  }

  // erratum probe: the order-6 cyclic group does not admit {0,1,5} as a
  // subgroup; record the rejection whenever that group is in the stream
  for (const auto& inst : instances) {
    if (inst.instance.group.name != "Z6") continue;
    finite_group z6 = cyclic(6);
    mask_t candidate = z6.universe.mask_of({"0", "1", "5"});
    if (!is_subgroup(z6, candidate)) {
      report.findings.push_back(finding_t{
          "erratum-candidate", "z6-015-subgroup",
          "candidate {0,1,5} in Z6 rejected: 1+1=2 lies outside, so it is "
          "not a subgroup and the discreteness discussion built on it does "
          "not apply"});
    } else {
      report.proven_violation = true;
      report.findings.push_back(finding_t{
          "erratum-candidate", "z6-015-subgroup",
          "candidate {0,1,5} in Z6 unexpectedly accepted as a subgroup"});
    }
    break;
  }
  return report;
}

bool replay_witness(const suite_witness& w,
                    const std::vector<theorem_record>& registry) {
  enumerated_instance inst;
  inst.instance = instance_from_witness(w);
  inst.name = "replay";
  inst.cls = classify(inst.instance);
  for (const auto& rec : registry) {
    if (rec.id != w.theorem_id) continue;
    auto verdict = rec.check(inst);
    return verdict && !verdict->empty();
  }
  fail(errc::bad_input, "witness names an unknown theorem '" + w.theorem_id + "'");
}

// ---------------------------------------------------------------------------
// counterexample search
// ---------------------------------------------------------------------------

namespace {

struct question_desc {
  std::string id;
  std::string note;
  bool refutes_proven;
  // nullopt: predicate does not apply; string: witness detail; "": no witness
  std::function<std::optional<std::string>(const enumerated_instance&)> probe;
};

std::vector<question_desc> question_catalog() {
  std::vector<question_desc> qs;

  qs.push_back({"Q-SYM-STR",
                "finite instances cannot witness this: the finite square-root "
                "property makes every instance strongly pre-topological, so "
                "the search is a consistency check",
                true,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.pretopological || !e.cls.symmetrically) return std::nullopt;
                  if (!e.cls.strongly)
                    return "symmetrically pre-topological instance that is not strongly";
                  return std::string();
                }});

  qs.push_back({"Q-PARA-T2-COMPACT",
                "finite spaces are compact; para instances are expected to be "
                "pretopological by the finite para-to-almost theorem",
                true,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.para) return std::nullopt;
                  separation_report_t sep = separation_report(e.instance.top);
                  if (!sep.t2) return std::nullopt;
                  if (!e.cls.pretopological)
                    return "compact T2 para instance that is not pretopological";
                  return std::string();
                }});

  qs.push_back({"Q-VXV",
                "whether almost topological instances always shrink VxV into "
                "a given neighborhood of x is open; a witness is a finding",
                false,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.pretopological || !e.cls.strongly) return std::nullopt;
                  const finite_group& g = e.instance.group;
                  for (mask_t u : e.instance.top.opens())
                    for (int p : mask_elements(u)) {
                      bool found = false;
                      for (mask_t v : e.instance.opens_at(g.identity))
                        if (subset_of(g.mul(g.mul_right(v, p), v), u)) {
                          found = true;
                          break;
                        }
                      if (!found)
                        return "x=" + g.universe.label(p) + ", U=" + label_set(g, u) +
                               ": no open V at e with VxV inside U";
                    }
                  return std::string();
                }});

  qs.push_back({"Q-IB-C",
                "finite reading of the covering-index vs cellularity question",
                false,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.pretopological) return std::nullopt;
                  int ib = covering_index(e.instance);
                  cardinal_report card = cardinals(e.instance.top);
                  if (ib > card.cellularity)
                    return "covering index " + std::to_string(ib) +
                           " exceeds cellularity " + std::to_string(card.cellularity);
                  return std::string();
                }});

  qs.push_back({"Q-DISCRETE-CLOSED",
                "probes which discrete subgroups fail to be closed; witnesses "
                "are expected (indiscrete instances already give them)",
                false,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.pretopological) return std::nullopt;
                  for (const subgroup_record& rec : discrete_subgroup_report(e.instance))
                    if (rec.discrete && !rec.closed)
                      return "discrete subgroup " +
                             label_set(e.instance.group, rec.subgroup) +
                             " is not closed";
                  return std::string();
                }});

  qs.push_back({"Q-DENSE-RESTR",
                "dense subgroup with open restriction whose intersection with "
                "the closed subgroup is not dense in it",
                false,
                [](const enumerated_instance& e) -> std::optional<std::string> {
                  if (!e.cls.pretopological || !e.cls.almost) return std::nullopt;
                  const finite_group& g = e.instance.group;
                  for (mask_t h : enumerate_subgroups(g)) {
                    if (closure(e.instance.top, h) != h) continue;
                    for (mask_t k : enumerate_subgroups(g)) {
                      if (closure(e.instance.top, k) != e.instance.top.space())
                        continue;
                      // restriction is open by the dense-restriction theorem;
                      // ask whether K n H is dense in H
                      pretopology trace = subspace(e.instance.top, h);
                      auto points = mask_elements(h);
                      mask_t kh_local = 0;
                      for (size_t i = 0; i < points.size(); ++i)
                        if (has_bit(k, points[i])) kh_local |= mask_t{1} << i;
                      if (closure(trace, kh_local) != trace.space())
                        return "K=" + label_set(g, k) + " dense, but K n H with H=" +
                               label_set(g, h) + " is not dense in H";
                    }
                  }
                  return std::string();
                }});

  return qs;
}

}  // namespace

std::vector<std::string> known_questions() {
  std::vector<std::string> out;
  for (const auto& q : question_catalog()) out.push_back(q.id);
  return out;
}

search_result search_counterexample(const search_task& task) {
  const auto catalog = question_catalog();
  const question_desc* desc = nullptr;
  for (const auto& q : catalog)
    if (q.id == task.question) desc = &q;
  if (!desc) fail(errc::unknown_question, "'" + task.question + "'");
  if (task.order_lo < 1 || task.order_hi < task.order_lo)
    fail(errc::bad_input, "order bounds must satisfy 1 <= lo <= hi");

  search_result result;
  result.question = desc->id;
  result.note = desc->note;
  result.refutes_proven = desc->refutes_proven;
  result.orders_lo = task.order_lo;
  result.orders_hi = task.order_hi;

  for (int order = task.order_lo; order <= task.order_hi; ++order) {
    for (const finite_group& g : groups_of_order(order)) {
      auto instances = enumerate_group_pretopologies(
          g, "", task.automorphism_dedup, enum_strategy::automatic, task.jobs);
      for (const auto& inst : instances) {
        ++result.instances_scanned;
        auto verdict = desc->probe(inst);
        if (verdict && !verdict->empty()) {
          result.witness = make_witness(desc->id, inst, inst.name + ": " + *verdict);
          return result;
        }
      }
    }
  }
  result.exhausted = true;
  return result;
}

}  // namespace pretop
