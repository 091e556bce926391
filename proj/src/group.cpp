#include "pretop/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"

namespace pretop {

mask_t finite_group::mul(mask_t a, mask_t b) const {
  mask_t out = 0;
  for (int x : mask_elements(a))
    for (int y : mask_elements(b)) out |= mask_t{1} << op(x, y);
  return out;
}

mask_t finite_group::mul_left(int g, mask_t a) const {
  mask_t out = 0;
  for (int x : mask_elements(a)) out |= mask_t{1} << op(g, x);
  return out;
}

mask_t finite_group::mul_right(mask_t a, int g) const {
  mask_t out = 0;
  for (int x : mask_elements(a)) out |= mask_t{1} << op(x, g);
  return out;
}

mask_t finite_group::set_inverse(mask_t a) const {
  mask_t out = 0;
  for (int x : mask_elements(a)) out |= mask_t{1} << inv(x);
  return out;
}

mask_t finite_group::conjugate(int g, mask_t a) const {
  mask_t out = 0;
  for (int x : mask_elements(a)) out |= mask_t{1} << op(op(g, x), inv(g));
  return out;
}

mask_t finite_group::pow_set(mask_t a, int k) const {
  mask_t out = a;
  for (int i = 1; i < k; ++i) out = mul(out, a);
  return out;
}

bool finite_group::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

mask_t finite_group::center() const {
  mask_t out = 0;
  int n = order();
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = op(a, b) == op(b, a);
    if (central) out |= mask_t{1} << a;
  }
  return out;
}

finite_group validate_group(const std::string& name, universe_t u,
                            std::vector<std::vector<int>> table) {
  int n = u.size();
  if (static_cast<int>(table.size()) != n)
    fail(errc::bad_input, "table must have " + std::to_string(n) + " rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(errc::bad_input, "table rows must have " + std::to_string(n) + " entries");
    for (int v : row)
      if (v < 0 || v >= n) fail(errc::bad_input, "table entry out of range");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          fail(errc::not_associative,
               "(" + u.label(x) + "," + u.label(y) + "," + u.label(z) + ")");
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(errc::no_identity, "no two-sided identity element");
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0) fail(errc::no_inverse, u.label(x));
  }
  finite_group g;
  g.name = name;
  g.universe = std::move(u);
  g.table = std::move(table);
  g.identity = identity;
  g.inverse = std::move(inverse);
  return g;
}

finite_group cyclic(int n) {
  if (n < 1) fail(errc::bad_input, "cyclic group needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return validate_group("Z" + std::to_string(n), universe_t(std::move(labels)),
                        std::move(table));
}

finite_group direct_product(const finite_group& g, const finite_group& h) {
  int n = g.order(), m = h.order();
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b)
      labels.push_back("(" + g.universe.label(a) + "," + h.universe.label(b) + ")");
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          table[a * m + b][c * m + d] = g.op(a, c) * m + h.op(b, d);
  return validate_group(g.name + "x" + h.name, universe_t(std::move(labels)),
                        std::move(table));
}

finite_group dihedral(int n) {
  if (n < 1) fail(errc::bad_input, "dihedral group needs n >= 1");
  // elements: r^i (0..n-1), then s r^i (n..2n-1)
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "r" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "s" : "sr" + std::to_string(i));
  auto id = [n](int flip, int rot) { return flip * n + rot; };
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < n; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < n; ++r2) {
          // (s^f1 r^r1)(s^f2 r^r2) = s^(f1^f2) r^(r2 + (f2 ? n-r1 : r1))
          int rot = f2 ? (r2 + n - r1) % n : (r1 + r2) % n;
          table[id(f1, r1)][id(f2, r2)] = id(f1 ^ f2, rot);
        }
  return validate_group("D" + std::to_string(n), universe_t(std::move(labels)),
                        std::move(table));
}

finite_group quaternion8() {
  // 1,-1,i,-i,j,-j,k,-k as signed basis pairs
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto enc = [](int basis, int sign) { return basis * 2 + (sign < 0 ? 1 : 0); };
  // basis 0=1, 1=i, 2=j, 3=k; multiplication of basis units with sign
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ba = a / 2, sa = a % 2 ? -1 : 1;
      int bb = b / 2, sb = b % 2 ? -1 : 1;
      table[a][b] = enc(prod[ba][bb], sa * sb * sign[ba][bb]);
    }
  return validate_group("Q8", universe_t(std::move(labels)), std::move(table));
}

namespace {

finite_group permutation_group(const std::string& name,
                               std::vector<std::vector<int>> perms,
                               std::vector<std::string> labels) {
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(perms[a].size());
      for (size_t i = 0; i < comp.size(); ++i) comp[i] = perms[a][perms[b][i]];
      for (int c = 0; c < n; ++c)
        if (perms[c] == comp) {
          table[a][b] = c;
          break;
        }
      if (table[a][b] < 0) fail(errc::bad_input, "permutation set not closed");
    }
  return validate_group(name, universe_t(std::move(labels)), std::move(table));
}

}  // namespace

finite_group alternating4() {
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;
  std::vector<int> base = {0, 1, 2, 3};
  std::vector<int> p = base;
  std::sort(p.begin(), p.end());
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) {
      perms.push_back(p);
      std::string label = "p";
      for (int v : p) label += std::to_string(v + 1);
      labels.push_back(label);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group("A4", std::move(perms), std::move(labels));
}

finite_group dicyclic3() {
  // a^6 = e, b^2 = a^3, b a b^-1 = a^-1; elements a^i b^f
  std::vector<std::string> labels;
  for (int f = 0; f < 2; ++f)
    for (int i = 0; i < 6; ++i) {
      std::string l = i == 0 ? "e" : "a" + std::to_string(i);
      if (f) l = (i == 0 ? "b" : "a" + std::to_string(i) + "b");
      labels.push_back(l);
    }
  auto id = [](int i, int f) { return f * 6 + i; };
  std::vector<std::vector<int>> table(12, std::vector<int>(12));
  for (int i1 = 0; i1 < 6; ++i1)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int i2 = 0; i2 < 6; ++i2)
        for (int f2 = 0; f2 < 2; ++f2) {
          // (a^i1 b^f1)(a^i2 b^f2): move b past a^i2 using b a = a^-1 b
          int i = f1 ? (i1 + 6 - i2) % 6 : (i1 + i2) % 6;
          int f = f1 ^ f2;
          if (f1 && f2) i = (i + 3) % 6;  // b^2 = a^3
          table[id(i1, f1)][id(i2, f2)] = id(i, f);
        }
  return validate_group("Dic3", universe_t(std::move(labels)), std::move(table));
}

std::vector<finite_group> groups_of_order(int n) {
  switch (n) {
    case 1: return {cyclic(1)};
    case 2: return {cyclic(2)};
    case 3: return {cyclic(3)};
    case 4: return {cyclic(4), direct_product(cyclic(2), cyclic(2))};
    case 5: return {cyclic(5)};
    case 6: return {cyclic(6), dihedral(3)};
    case 7: return {cyclic(7)};
    case 8:
      return {cyclic(8), direct_product(cyclic(4), cyclic(2)),
              direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
              dihedral(4), quaternion8()};
    case 9: return {cyclic(9), direct_product(cyclic(3), cyclic(3))};
    case 10: return {cyclic(10), dihedral(5)};
    case 11: return {cyclic(11)};
    case 12:
      return {cyclic(12), direct_product(cyclic(6), cyclic(2)), dihedral(6),
              alternating4(), dicyclic3()};
    default:
      fail(errc::cap_exceeded, "group catalog covers orders 1..12");
  }
}

std::optional<finite_group> group_by_name(const std::string& name) {
  if (name.rfind("cyclic:", 0) == 0) {
    try {
      return cyclic(std::stoi(name.substr(7)));
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  for (int n = 1; n <= 12; ++n)
    for (auto& g : groups_of_order(n))
      if (g.name == name) return g;
  return std::nullopt;
}

bool is_subgroup(const finite_group& g, mask_t s) {
  if (!has_bit(s, g.identity)) return false;
  for (int a : mask_elements(s)) {
    if (!has_bit(s, g.inv(a))) return false;
    for (int b : mask_elements(s))
      if (!has_bit(s, g.op(a, b))) return false;
  }
  return true;
}

mask_t subgroup_generated(const finite_group& g, mask_t s) {
  mask_t h = s | (mask_t{1} << g.identity);
  while (true) {
    mask_t next = h | g.set_inverse(h) | g.mul(h, h);
    if (next == h) return h;
    h = next;
  }
}

std::vector<mask_t> cosets(const finite_group& g, mask_t h, side_t side) {
  if (!is_subgroup(g, h)) fail(errc::not_subgroup, "coset base is not a subgroup");
  std::vector<mask_t> out;
  mask_t seen = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (has_bit(seen, a)) continue;
    mask_t c = side == side_t::left ? g.mul_left(a, h) : g.mul_right(h, a);
    out.push_back(c);
    seen |= c;
  }
  return out;
}

bool is_normal(const finite_group& g, mask_t h) {
  if (!is_subgroup(g, h)) fail(errc::not_subgroup, "normality of a non-subgroup");
  for (int a = 0; a < g.order(); ++a)
    if (g.conjugate(a, h) != h) return false;
  return true;
}

bool is_homomorphism(const finite_group& g, const finite_group& h,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (int v : map)
    if (v < 0 || v >= h.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map[g.op(a, b)] != h.op(map[a], map[b])) return false;
  return true;
}

mask_t kernel(const group_hom& hom) {
  mask_t out = 0;
  for (int a = 0; a < hom.domain->order(); ++a)
    if (hom.map[a] == hom.codomain->identity) out |= mask_t{1} << a;
  return out;
}

quotient_result quotient_group(const finite_group& g, mask_t h) {
  if (!is_normal(g, h)) fail(errc::not_normal, "quotient needs a normal subgroup");
  quotient_result out;
  out.cosets = cosets(g, h, side_t::left);
  int k = static_cast<int>(out.cosets.size());
  out.projection.assign(g.order(), -1);
  std::vector<std::string> labels;
  for (int c = 0; c < k; ++c) {
    int repr = mask_elements(out.cosets[c]).front();
    labels.push_back(g.universe.label(repr) + "+H");
    for (int x : mask_elements(out.cosets[c])) out.projection[x] = c;
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int ra = mask_elements(out.cosets[a]).front();
      int rb = mask_elements(out.cosets[b]).front();
      table[a][b] = out.projection[g.op(ra, rb)];
    }
  out.group = validate_group(g.name + "/H", universe_t(std::move(labels)),
                             std::move(table));
  return out;
}

std::vector<mask_t> enumerate_subgroups(const finite_group& g) {
  if (g.order() > caps().subgroup_order)
    fail(errc::cap_exceeded, "subgroup enumeration needs |G| <= " +
                                 std::to_string(caps().subgroup_order));
  std::set<mask_t> found;
  std::vector<mask_t> work;
  mask_t trivial = mask_t{1} << g.identity;
  found.insert(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    mask_t h = work.back();
    work.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (has_bit(h, x)) continue;
      mask_t bigger = subgroup_generated(g, h | (mask_t{1} << x));
      if (found.insert(bigger).second) work.push_back(bigger);
    }
  }
  std::vector<mask_t> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

namespace {

// Backtracking over images of a generating sequence.
void iso_search(const finite_group& g, const finite_group& h,
                const std::vector<int>& gens, size_t gi, std::vector<int>& map,
                std::vector<std::vector<int>>& out) {
  // map: partial (-1 unknown), always closed under products of known values
  if (gi == gens.size()) {
    std::vector<int> full = map;
    // close under multiplication to define every element
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
          if (full[a] < 0 || full[b] < 0) continue;
          int ab = g.op(a, b);
          int im = h.op(full[a], full[b]);
          if (full[ab] < 0) {
            full[ab] = im;
            changed = true;
          } else if (full[ab] != im) {
            return;
          }
        }
    }
    for (int v : full)
      if (v < 0) return;
    std::vector<bool> hit(h.order(), false);
    for (int v : full) {
      if (hit[v]) return;
      hit[v] = true;
    }
    if (!is_homomorphism(g, h, full)) return;
    out.push_back(full);
    return;
  }
  int gen = gens[gi];
  for (int image = 0; image < h.order(); ++image) {
    map[gen] = image;
    // consistency of the subgroup generated so far
    std::vector<int> probe = map;
    bool ok = true;
    bool changed = true;
    while (changed && ok) {
      changed = false;
      for (int a = 0; a < g.order() && ok; ++a)
        for (int b = 0; b < g.order() && ok; ++b) {
          if (probe[a] < 0 || probe[b] < 0) continue;
          int ab = g.op(a, b);
          int im = h.op(probe[a], probe[b]);
          if (probe[ab] < 0) {
            probe[ab] = im;
            changed = true;
          } else if (probe[ab] != im) {
            ok = false;
          }
        }
    }
    if (ok) {
      std::vector<int> saved = map;
      map = probe;
      iso_search(g, h, gens, gi + 1, map, out);
      map = saved;
    }
    map[gen] = -1;
  }
}

std::vector<int> generating_sequence(const finite_group& g) {
  std::vector<int> gens;
  mask_t have = mask_t{1} << g.identity;
  for (int x = 0; x < g.order() && have != g.universe.all(); ++x) {
    if (has_bit(have, x)) continue;
    gens.push_back(x);
    have = subgroup_generated(g, have | (mask_t{1} << x));
  }
  return gens;
}

}  // namespace

std::vector<std::vector<int>> group_isomorphisms(const finite_group& g,
                                                 const finite_group& h) {
  if (g.order() != h.order()) return {};
  if (g.order() > caps().iso_order)
    fail(errc::cap_exceeded, "isomorphism search needs |G| <= " +
                                 std::to_string(caps().iso_order));
  std::vector<int> gens = generating_sequence(g);
  std::vector<int> map(g.order(), -1);
  map[g.identity] = h.identity;
  std::vector<std::vector<int>> out;
  iso_search(g, h, gens, 0, map, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphisms(const finite_group& g) {
  return group_isomorphisms(g, g);
}

}  // namespace pretop
