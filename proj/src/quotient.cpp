#include "pretop/quotient.hpp"

#include <algorithm>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"

namespace pretop {

namespace {

// Coset partition plus canonical labels, shared by the space and the group.
struct coset_data {
  std::vector<mask_t> cosets;
  std::vector<int> projection;
  universe_t universe;
};

coset_data coset_setup(const pretop_group& x, mask_t h, side_t side) {
  if (!is_subgroup(x.group, h)) fail(errc::not_subgroup, "quotient by a non-subgroup");
  coset_data d;
  d.cosets = cosets(x.group, h, side);
  if (static_cast<int>(d.cosets.size()) > caps().coset_count)
    fail(errc::cap_exceeded, "coset count exceeds " +
                                 std::to_string(caps().coset_count));
  d.projection.assign(x.group.order(), -1);
  std::vector<std::string> labels;
  for (size_t c = 0; c < d.cosets.size(); ++c) {
    int repr = mask_elements(d.cosets[c]).front();
    labels.push_back(x.group.universe.label(repr) + "+H");
    for (int p : mask_elements(d.cosets[c])) d.projection[p] = static_cast<int>(c);
  }
  d.universe = universe_t(std::move(labels));
  return d;
}

mask_t preimage(const coset_data& d, mask_t coset_set) {
  mask_t out = 0;
  for (int c : mask_elements(coset_set)) out |= d.cosets[c];
  return out;
}

mask_t image(const coset_data& d, mask_t s) {
  mask_t out = 0;
  for (int p : mask_elements(s)) out |= mask_t{1} << d.projection[p];
  return out;
}

}  // namespace

quotient_space coset_space(const pretop_group& x, mask_t h, side_t side) {
  coset_data d = coset_setup(x, h, side);
  int k = static_cast<int>(d.cosets.size());

  // quotient pre-topology: exhaustive preimage test over coset subsets
  std::vector<mask_t> opens;
  for (mask_t w = 0; w < (mask_t{1} << k); ++w)
    if (x.top.is_open(preimage(d, w))) opens.push_back(w);
  pretopology top{set_family(d.universe, std::move(opens))};

  quotient_space q;
  q.base = x;
  q.subgroup = h;
  q.cosets = d.cosets;
  q.projection = d.projection;
  q.top = std::move(top);

  q.checks.pi_open = true;
  for (mask_t u : x.top.opens())
    if (!q.top.is_open(image(d, u))) {
      q.checks.pi_open = false;
      break;
    }
  // {pi(xU) : U open at e} is a local pre-base at xH
  q.checks.translate_prebase = true;
  for (int p = 0; p < x.group.order() && q.checks.translate_prebase; ++p) {
    int coset = d.projection[p];
    for (mask_t w : q.top.opens()) {
      if (!has_bit(w, coset)) continue;
      bool found = false;
      for (mask_t u : x.top.opens()) {
        if (!has_bit(u, x.group.identity)) continue;
        mask_t xu = side == side_t::left ? x.group.mul_left(p, u)
                                         : x.group.mul_right(u, p);
        mask_t img = image(d, xu);
        if (has_bit(img, coset) && subset_of(img, w)) {
          found = true;
          break;
        }
      }
      if (!found) {
        q.checks.translate_prebase = false;
        break;
      }
    }
  }
  if (closure(x.top, h) == h) {
    bool t1 = true;
    for (int y = 0; y < k && t1; ++y)
      for (int z = 0; z < k && t1; ++z) {
        if (y == z) continue;
        bool sees_y = false;
        for (mask_t w : q.top.opens())
          if (has_bit(w, y) && !has_bit(w, z)) {
            sees_y = true;
            break;
          }
        t1 = sees_y;
      }
    q.checks.t1 = t1;
    q.checks.regular = is_regular(q.top);
  }
  return q;
}

bool discrete_iff_open_check(const pretop_group& x, mask_t h) {
  quotient_space q = coset_space(x, h);
  bool discrete = static_cast<std::uint64_t>(q.top.opens().size()) ==
                  (std::uint64_t{1} << q.cosets.size());
  return discrete == x.top.is_open(h);
}

quotient_group_result quotient_group_pretop(const pretop_group& x, mask_t h) {
  classification base_cls = classify(x);
  if (!base_cls.pretopological)
    fail(errc::not_pretop_group, "quotient group needs a pretopological instance");
  if (!is_subgroup(x.group, h)) fail(errc::not_subgroup, "quotient by a non-subgroup");
  if (!is_normal(x.group, h)) fail(errc::not_normal, "quotient group needs a normal subgroup");
  if (closure(x.top, h) != h)
    fail(errc::not_closed_subgroup, "quotient group needs a closed subgroup");

  quotient_space space = coset_space(x, h);
  quotient_result grp = quotient_group(x.group, h);
  // coset_setup and quotient_group both order cosets by least representative
  quotient_group_result out;
  pretopology top = space.top;
  top.fam.universe = grp.group.universe;
  out.quotient = make_pretop_group(grp.group, std::move(top));
  out.cosets = space.cosets;
  out.projection = space.projection;
  out.cls = classify(out.quotient);
  out.separation = separation_report(out.quotient.top);

  // WV inside U forces closure(pi(V)) inside pi(U)
  coset_data d{space.cosets, space.projection, out.quotient.top.fam.universe};
  out.sandwich_ok = true;
  auto at_e = x.opens_at(x.group.identity);
  for (mask_t u : at_e) {
    for (mask_t v : at_e) {
      for (mask_t w : at_e) {
        if (!subset_of(x.group.mul(w, v), u)) continue;
        mask_t piv = image(d, v), piu = image(d, u);
        if (!subset_of(closure(out.quotient.top, piv), piu)) {
          out.sandwich_ok = false;
          break;
        }
      }
      if (!out.sandwich_ok) break;
    }
    if (!out.sandwich_ok) break;
  }
  return out;
}

first_iso_report first_isomorphism_check(const group_hom& p, const pretop_group& g,
                                         const pretop_group& h) {
  first_iso_report rep;
  if (!is_homomorphism(*p.domain, *p.codomain, p.map))
    fail(errc::bad_input, "the map is not a homomorphism");
  std::vector<bool> hit(h.group.order(), false);
  for (int v : p.map) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(errc::not_surjective, "the homomorphism is not onto");
  for (mask_t w : h.top.opens()) {
    mask_t pre = 0;
    for (int a = 0; a < g.group.order(); ++a)
      if (has_bit(w, p.map[a])) pre |= mask_t{1} << a;
    if (!g.top.is_open(pre)) fail(errc::not_precontinuous, "a preimage is not open");
  }
  for (mask_t u : g.top.opens()) {
    mask_t img = 0;
    for (int a : mask_elements(u)) img |= mask_t{1} << p.map[a];
    if (!h.top.is_open(img)) fail(errc::not_open_map, "an image is not open");
  }

  rep.kernel_set = kernel(p);
  quotient_group_result q = quotient_group_pretop(g, rep.kernel_set);

  // Phi(xN) = p(x): well-defined by the kernel, bijective by surjectivity.
  int k = static_cast<int>(q.cosets.size());
  std::vector<int> phi(k, -1);
  for (int a = 0; a < g.group.order(); ++a) {
    int c = q.projection[a];
    if (phi[c] < 0) phi[c] = p.map[a];
    else if (phi[c] != p.map[a]) {
      rep.ok = false;
      rep.detail = "value depends on the representative";
      return rep;
    }
  }
  if (!is_homomorphism(q.quotient.group, h.group, phi)) {
    rep.ok = false;
    rep.detail = "induced map is not a homomorphism";
    return rep;
  }
  std::vector<bool> seen(h.group.order(), false);
  for (int v : phi) {
    if (seen[v]) {
      rep.ok = false;
      rep.detail = "induced map is not injective";
      return rep;
    }
    seen[v] = true;
  }
  if (k != h.group.order()) {
    rep.ok = false;
    rep.detail = "coset count differs from the codomain order";
    return rep;
  }
  // bicontinuity: opens correspond exactly under phi
  for (mask_t u : q.quotient.top.opens()) {
    mask_t img = 0;
    for (int c : mask_elements(u)) img |= mask_t{1} << phi[c];
    if (!h.top.is_open(img)) {
      rep.ok = false;
      rep.detail = "induced map is not open";
      return rep;
    }
  }
  for (mask_t w : h.top.opens()) {
    mask_t pre = 0;
    for (int c = 0; c < k; ++c)
      if (has_bit(w, phi[c])) pre |= mask_t{1} << c;
    if (!q.quotient.top.is_open(pre)) {
      rep.ok = false;
      rep.detail = "induced map is not pre-continuous";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

bool isomorphic(const pretop_group& a, const pretop_group& b) {
  if (a.group.order() != b.group.order()) return false;
  if (a.top.opens().size() != b.top.opens().size()) return false;
  for (const auto& iso : group_isomorphisms(a.group, b.group)) {
    bool opens_match = true;
    for (mask_t u : a.top.opens()) {
      mask_t img = 0;
      for (int p : mask_elements(u)) img |= mask_t{1} << iso[p];
      if (!b.top.is_open(img)) {
        opens_match = false;
        break;
      }
    }
    if (opens_match) return true;  // counts equal, so the image is onto
  }
  return false;
}

pretop_group subgroup_instance(const pretop_group& x, mask_t h) {
  if (!is_subgroup(x.group, h)) fail(errc::not_subgroup, "trace of a non-subgroup");
  auto points = mask_elements(h);
  int k = static_cast<int>(points.size());
  std::vector<int> local(x.group.order(), -1);
  for (int i = 0; i < k; ++i) local[points[i]] = i;
  std::vector<std::string> labels;
  for (int p : points) labels.push_back(x.group.universe.label(p));
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = local[x.group.op(points[i], points[j])];
  finite_group sub = validate_group(x.group.name + "|H", universe_t(labels), std::move(table));
  pretopology trace = subspace(x.top, h);
  trace.fam.universe = sub.universe;
  return make_pretop_group(std::move(sub), std::move(trace));
}

}  // namespace pretop
