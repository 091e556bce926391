#include "pretop/setfam.hpp"

#include <algorithm>
#include <unordered_set>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"

namespace pretop {

set_family::set_family(universe_t u, std::vector<mask_t> ms)
    : universe(std::move(u)), members(std::move(ms)) {
  mask_t space = universe.all();
  for (mask_t m : members)
    if ((m & ~space) != 0)
      fail(errc::bad_input, "member outside the universe");
  std::sort(members.begin(), members.end(), canonical_mask_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool set_family::contains(mask_t m) const {
  return std::binary_search(members.begin(), members.end(), m,
                            canonical_mask_less);
}

pretopology union_close(const universe_t& u, const std::vector<mask_t>& generators) {
  mask_t total = 0;
  for (mask_t g : generators) total |= g;
  if (total != u.all())
    fail(errc::universe_not_covered, "generators do not cover the universe");

  // Saturate pairwise unions; finite, so this reaches arbitrary unions.
  std::unordered_set<mask_t> closed(generators.begin(), generators.end());
  closed.insert(0);
  closed.insert(u.all());
  std::vector<mask_t> work(closed.begin(), closed.end());
  const int member_cap = caps().product_members;
  while (!work.empty()) {
    mask_t a = work.back();
    work.pop_back();
    std::vector<mask_t> fresh;
    for (mask_t b : closed) {
      mask_t un = a | b;
      if (!closed.count(un)) fresh.push_back(un);
    }
    for (mask_t un : fresh)
      if (closed.insert(un).second) work.push_back(un);
    if (static_cast<int>(closed.size()) > member_cap)
      fail(errc::cap_exceeded, "union closure exceeds " +
                                   std::to_string(member_cap) + " members");
  }
  return pretopology{set_family(u, std::vector<mask_t>(closed.begin(), closed.end()))};
}

std::optional<pretopology_violation> is_pretopology(const set_family& fam) {
  if (!fam.contains(0)) return pretopology_violation{pretopology_violation::missing_empty};
  for (size_t i = 0; i < fam.members.size(); ++i)
    for (size_t j = i + 1; j < fam.members.size(); ++j) {
      mask_t un = fam.members[i] | fam.members[j];
      if (!fam.contains(un))
        return pretopology_violation{pretopology_violation::union_not_member,
                                     fam.members[i], fam.members[j]};
    }
  mask_t total = 0;
  for (mask_t m : fam.members) total |= m;
  if (total != fam.universe.all() || !fam.contains(fam.universe.all()))
    return pretopology_violation{pretopology_violation::missing_full};
  return std::nullopt;
}

bool is_prebase(const set_family& candidate, const pretopology& top) {
  for (mask_t m : candidate.members)
    if (!top.is_open(m))
      fail(errc::not_subfamily, "candidate member is not open");
  for (mask_t open : top.opens()) {
    mask_t covered = 0;
    for (mask_t m : candidate.members)
      if (subset_of(m, open)) covered |= m;
    if (covered != open) return false;
  }
  return true;
}

set_family minimal_prebase(const pretopology& top) {
  std::vector<mask_t> out;
  for (mask_t m : top.opens()) {
    if (m == 0) continue;
    mask_t below = 0;
    for (mask_t other : top.opens())
      if (other != m && subset_of(other, m)) below |= other;
    if (below != m) out.push_back(m);
  }
  return set_family(top.universe(), std::move(out));
}

mask_t interior(const pretopology& top, mask_t s) {
  mask_t out = 0;
  for (mask_t m : top.opens())
    if (subset_of(m, s)) out |= m;
  return out;
}

mask_t closure(const pretopology& top, mask_t s) {
  mask_t avoid = 0;
  for (mask_t m : top.opens())
    if ((m & s) == 0) avoid |= m;
  return top.space() & ~avoid;
}

pretopology subspace(const pretopology& top, mask_t s) {
  if (s == 0) fail(errc::empty_subspace, "subspace of the empty set");
  auto points = mask_elements(s);
  universe_t u(top.universe().mask_labels(s));
  std::vector<mask_t> traces;
  for (mask_t m : top.opens()) {
    mask_t t = 0;
    for (size_t i = 0; i < points.size(); ++i)
      if (has_bit(m, points[i])) t |= mask_t{1} << i;
    traces.push_back(t);
  }
  return pretopology{set_family(std::move(u), std::move(traces))};
}

pretopology subspace_relabel(const pretopology& top, mask_t s) {
  return subspace(top, s);
}

bool is_connected(const pretopology& top, mask_t s) {
  if (s == 0) fail(errc::empty_subspace, "connectedness of the empty set");
  for (mask_t m : top.opens()) {
    mask_t t = m & s;
    if (t == 0 || t == s) continue;
    // complement-in-S must also be a trace of an open
    mask_t rest = s & ~t;
    for (mask_t other : top.opens())
      if ((other & s) == rest) return false;
  }
  return true;
}

mask_t component(const pretopology& top, int z) {
  int n = top.points();
  if (n > caps().component_points)
    fail(errc::cap_exceeded, "component scan needs |X| <= " +
                                 std::to_string(caps().component_points));
  mask_t rest = top.space() & ~(mask_t{1} << z);
  auto others = mask_elements(rest);
  mask_t comp = 0;
  mask_t count = mask_t{1} << others.size();
  for (mask_t pick = 0; pick < count; ++pick) {
    mask_t s = mask_t{1} << z;
    for (size_t i = 0; i < others.size(); ++i)
      if (has_bit(pick, static_cast<int>(i))) s |= mask_t{1} << others[i];
    if (is_connected(top, s)) comp |= s;
  }
  return comp;
}

std::vector<mask_t> atoms_at(const pretopology& top, int z) {
  std::vector<mask_t> out;
  for (mask_t m : top.opens()) {
    if (!has_bit(m, z)) continue;
    bool minimal = true;
    for (mask_t other : top.opens())
      if (other != m && has_bit(other, z) && subset_of(other, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

namespace {

// Exact maximum pairwise-disjoint subfamily, branch and bound.
void cellular_search(const std::vector<mask_t>& mins, size_t idx, mask_t used,
                     std::vector<mask_t>& current, std::vector<mask_t>& best) {
  if (current.size() > best.size()) best = current;
  if (idx >= mins.size()) return;
  if (current.size() + (mins.size() - idx) <= best.size()) return;  // bound
  if ((mins[idx] & used) == 0) {
    current.push_back(mins[idx]);
    cellular_search(mins, idx + 1, used | mins[idx], current, best);
    current.pop_back();
  }
  cellular_search(mins, idx + 1, used, current, best);
}

// Exact minimum hitting set over the minimal opens (ascending size scan).
mask_t min_hitting_set(const std::vector<mask_t>& mins, int n) {
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      mask_t d = 0;
      for (int i : pick) d |= mask_t{1} << i;
      bool hits_all = true;
      for (mask_t m : mins)
        if ((m & d) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) return d;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return full_mask(n);
}

}  // namespace

cardinal_report cardinals(const pretopology& top) {
  cardinal_report rep;
  set_family mins = minimal_prebase(top);
  rep.weight = mins.size();
  int n = top.points();
  rep.character.resize(n, 0);
  for (int z = 0; z < n; ++z)
    rep.character[z] = static_cast<int>(atoms_at(top, z).size());

  std::vector<mask_t> nonempty;
  for (mask_t m : mins.members)
    if (m != 0) nonempty.push_back(m);
  std::vector<mask_t> current, best;
  cellular_search(nonempty, 0, 0, current, best);
  rep.cellularity = static_cast<int>(best.size());
  rep.cellular_family = best;

  rep.dense_set = min_hitting_set(nonempty, n);
  rep.density = popcount(rep.dense_set);
  return rep;
}

namespace {

bool two_color(const std::vector<mask_t>& edges, int n, int idx, mask_t& a, mask_t& b) {
  if (idx == n) {
    for (mask_t e : edges)
      if ((e & a) == 0 || (e & b) == 0) return false;
    return true;
  }
  for (int color = 0; color < 2; ++color) {
    mask_t& side = color == 0 ? a : b;
    side |= mask_t{1} << idx;
    // prune: any fully assigned edge must already be bichromatic
    bool feasible = true;
    for (mask_t e : edges) {
      if (subset_of(e, a | b) && ((e & a) == 0 || (e & b) == 0)) {
        feasible = false;
        break;
      }
    }
    if (feasible && two_color(edges, n, idx + 1, a, b)) return true;
    side &= ~(mask_t{1} << idx);
  }
  return false;
}

}  // namespace

std::optional<std::pair<mask_t, mask_t>> resolvable_witness(const pretopology& top) {
  set_family mins = minimal_prebase(top);
  std::vector<mask_t> edges;
  for (mask_t m : mins.members)
    if (m != 0) edges.push_back(m);
  mask_t a = 0, b = 0;
  if (two_color(edges, top.points(), 0, a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

pretopology product(const pretopology& a, const pretopology& b) {
  int na = a.points(), nb = b.points();
  if (na * nb > caps().product_points)
    fail(errc::cap_exceeded, "product universe exceeds " +
                                 std::to_string(caps().product_points) + " points");
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back("(" + a.universe().label(i) + "," + b.universe().label(j) + ")");
  universe_t u(std::move(labels));
  std::vector<mask_t> boxes;
  for (mask_t ua : a.opens())
    for (mask_t ub : b.opens()) {
      mask_t box = 0;
      for (int i : mask_elements(ua))
        for (int j : mask_elements(ub)) box |= mask_t{1} << (i * nb + j);
      boxes.push_back(box);
    }
  return union_close(u, boxes);
}

bool product_open(const pretopology& a, const pretopology& b,
                  const std::vector<mask_t>& s_rows) {
  // s_rows[i] = the b-slice of S at a-point i.
  for (int i = 0; i < a.points(); ++i) {
    for (int j : mask_elements(s_rows[i])) {
      bool covered = false;
      for (mask_t ua : a.opens()) {
        if (!has_bit(ua, i)) continue;
        for (mask_t ub : b.opens()) {
          if (!has_bit(ub, j)) continue;
          bool inside = true;
          for (int i2 : mask_elements(ua))
            if (!subset_of(ub, s_rows[i2])) {
              inside = false;
              break;
            }
          if (inside) {
            covered = true;
            break;
          }
        }
        if (covered) break;
      }
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace pretop
