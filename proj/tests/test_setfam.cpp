#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "pretop/caps.hpp"
#include "pretop/errors.hpp"
#include "pretop/explore.hpp"
#include "pretop/io.hpp"
#include "pretop/setfam.hpp"

using namespace pretop;

namespace {

universe_t points(int n) {
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.push_back(std::to_string(i));
  return universe_t(ls);
}

std::vector<mask_t> p6_generators(const universe_t& u) {
  return {u.mask_of({"0", "3"}), u.mask_of({"1", "4"}), u.mask_of({"2", "5"}),
          u.mask_of({"0", "2", "4"}), u.mask_of({"1", "3", "5"})};
}

void for_each_small_family(int n, const std::function<void(const pretopology&)>& f) {
  enumerate_pretopologies(n, f);
}

}  // namespace

TEST_CASE("union closure of the coset generators yields the 22-set family") {
  pretopology p6 = fixture_p6_topology();
  universe_t u = p6.universe();
  pretopology built = union_close(u, p6_generators(u));
  CHECK(built.fam == p6.fam);
  CHECK(p6.opens().size() == 22);
}

TEST_CASE("union closure trivial cases and errors") {
  universe_t u3 = points(3);
  pretopology ind = union_close(u3, {u3.all()});
  CHECK(ind.opens().size() == 2);
  pretopology dis = union_close(u3, {1, 2, 4});
  CHECK(dis.opens().size() == 8);

  CHECK_THROWS_WITH_AS(union_close(u3, {1, 2}), doctest::Contains("UniverseNotCovered"),
                       error);

  // idempotent and extensive
  pretopology again = union_close(u3, dis.opens());
  CHECK(again.fam == dis.fam);
}

TEST_CASE("pre-topology recognition with witnesses") {
  CHECK_FALSE(is_pretopology(fixture_p6_topology().fam));
  CHECK_FALSE(is_pretopology(fixture_p4_topology().fam));

  universe_t u2 = points(2);
  set_family bad(u2, {0, 1, 2});  // empty, {0}, {1}: union missing
  auto v = is_pretopology(bad);
  REQUIRE(v.has_value());
  CHECK(v->kind == pretopology_violation::union_not_member);
  CHECK((v->a | v->b) == 3);
}

TEST_CASE("pre-base recognition") {
  pretopology p6 = fixture_p6_topology();
  universe_t u = p6.universe();
  CHECK(is_prebase(set_family(u, p6_generators(u)), p6));
  CHECK(is_prebase(p6.fam, p6));  // a pre-topology is its own pre-base

  universe_t u2 = points(2);
  pretopology d2 = union_close(u2, {1, 2});
  CHECK_FALSE(is_prebase(set_family(u2, {u2.all()}), d2));
  CHECK_THROWS_WITH_AS(is_prebase(set_family(u2, {1}), pretopology{set_family(u2, {0, 3})}),
                       doctest::Contains("NotSubfamily"), error);
}

TEST_CASE("minimal pre-base and weight") {
  pretopology p6 = fixture_p6_topology();
  set_family mins = minimal_prebase(p6);
  CHECK(mins.members == set_family(p6.universe(), p6_generators(p6.universe())).members);

  pretopology p4 = fixture_p4_topology();
  set_family mins4 = minimal_prebase(p4);
  CHECK(mins4.size() == 4);  // the four 3-element sets; G is a union of two
  for (mask_t m : mins4.members) CHECK(popcount(m) == 3);

  universe_t u3 = points(3);
  CHECK(minimal_prebase(union_close(u3, {u3.all()})).members ==
        std::vector<mask_t>{u3.all()});
}

TEST_CASE("minimal pre-base is a pre-base and cannot shrink") {
  for (int n = 1; n <= 4; ++n)
    for_each_small_family(n, [&](const pretopology& top) {
      set_family mins = minimal_prebase(top);
      CHECK(is_prebase(mins, top));
      for (size_t drop = 0; drop < mins.members.size(); ++drop) {
        std::vector<mask_t> rest;
        for (size_t i = 0; i < mins.members.size(); ++i)
          if (i != drop) rest.push_back(mins.members[i]);
        CHECK_FALSE(is_prebase(set_family(top.universe(), rest), top));
      }
    });
}

TEST_CASE("interior and closure fixtures") {
  pretopology p6 = fixture_p6_topology();
  universe_t u = p6.universe();
  CHECK(closure(p6, u.mask_of({"0"})) == u.mask_of({"0"}));
  CHECK(interior(p6, u.mask_of({"0", "3", "4"})) == u.mask_of({"0", "3"}));
  CHECK(closure(p6, p6.space()) == p6.space());
  CHECK(interior(p6, 0) == 0);
}

TEST_CASE("closure operator laws and duality, exhaustively on small families") {
  for (int n = 1; n <= 4; ++n)
    for_each_small_family(n, [&](const pretopology& top) {
      mask_t space = top.space();
      for (mask_t s = 0; s <= space; ++s) {
        mask_t cl = closure(top, s);
        CHECK(subset_of(s, cl));                    // extensive
        CHECK(closure(top, cl) == cl);              // idempotent
        CHECK(interior(top, s) == (space & ~closure(top, space & ~s)));  // duality
        for (mask_t t = 0; t <= space; ++t)
          if (subset_of(s, t)) CHECK(subset_of(cl, closure(top, t)));  // monotone
      }
      // closed sets are intersection-closed
      std::vector<mask_t> closed;
      for (mask_t open : top.opens()) closed.push_back(space & ~open);
      for (mask_t a : closed)
        for (mask_t b : closed)
          CHECK(closure(top, a & b) == (a & b));
    });
}

TEST_CASE("subspace traces") {
  pretopology p6 = fixture_p6_topology();
  universe_t u = p6.universe();
  pretopology tr = subspace(p6, u.mask_of({"0", "3"}));
  CHECK(tr.opens().size() == 4);  // discrete on two points

  universe_t u4 = points(4);
  pretopology d4 = union_close(u4, {1, 2, 4, 8});
  CHECK(subspace(d4, 0b0110).opens().size() == 4);
  pretopology i4 = union_close(u4, {u4.all()});
  CHECK(subspace(i4, 0b0111).opens().size() == 2);

  CHECK_THROWS_WITH_AS(subspace(p6, 0), doctest::Contains("EmptySubspace"), error);
}

TEST_CASE("connectedness and components") {
  pretopology p6 = fixture_p6_topology();
  universe_t u = p6.universe();
  CHECK_FALSE(is_connected(p6, u.mask_of({"0", "3"})));
  CHECK(component(p6, 0) == u.mask_of({"0"}));  // totally disconnected

  universe_t u3 = points(3);
  pretopology i3 = union_close(u3, {u3.all()});
  CHECK(is_connected(i3, u3.all()));
  CHECK(component(i3, 1) == u3.all());

  int saved = caps().component_points;
  caps().component_points = 2;
  CHECK_THROWS_WITH_AS(component(p6, 0), doctest::Contains("CapExceeded"), error);
  caps().component_points = saved;
}

TEST_CASE("cardinal report on the fixtures") {
  pretopology p6 = fixture_p6_topology();
  cardinal_report rep = cardinals(p6);
  CHECK(rep.weight == 5);
  for (int z = 0; z < 6; ++z) CHECK(rep.character[z] == 2);
  CHECK(rep.cellularity == 3);
  CHECK(rep.density == 3);

  universe_t u4 = points(4);
  cardinal_report ind = cardinals(union_close(u4, {u4.all()}));
  CHECK(ind.weight == 1);
  CHECK(ind.character == std::vector<int>(4, 1));
  CHECK(ind.cellularity == 1);
  CHECK(ind.density == 1);
  cardinal_report dis = cardinals(union_close(u4, {1, 2, 4, 8}));
  CHECK(dis.weight == 4);
  CHECK(dis.cellularity == 4);
  CHECK(dis.density == 4);
}

TEST_CASE("cardinal functions match the brute-force oracles") {
  auto crosscheck = [](const pretopology& top) {
    cardinal_report rep = cardinals(top);
    CHECK(rep.weight == oracles::weight(top));
    CHECK(rep.cellularity == oracles::cellularity(top));
    CHECK(rep.density == oracles::density(top));
    for (int z = 0; z < top.points(); ++z)
      CHECK(rep.character[z] == oracles::character_at(top, z));
  };
  for (int n = 1; n <= 3; ++n) for_each_small_family(n, crosscheck);
  crosscheck(fixture_p4_topology());
}

TEST_CASE("P6 cardinals against the oracles") {
  pretopology p6 = fixture_p6_topology();
  CHECK(oracles::weight(p6) == 5);
  CHECK(oracles::cellularity(p6) == 3);
  CHECK(oracles::density(p6) == 3);
  CHECK(oracles::character_at(p6, 0) == 2);
}

TEST_CASE("resolvability with witnesses") {
  pretopology p6 = fixture_p6_topology();
  auto w = resolvable_witness(p6);
  REQUIRE(w.has_value());
  CHECK(w->first == p6.universe().mask_of({"0", "1", "2"}));
  CHECK(w->second == p6.universe().mask_of({"3", "4", "5"}));
  // both parts meet every nonempty open
  for (mask_t open : p6.opens())
    if (open != 0) {
      CHECK((open & w->first) != 0);
      CHECK((open & w->second) != 0);
    }

  universe_t u3 = points(3);
  CHECK_FALSE(resolvable_witness(union_close(u3, {1, 2, 4})).has_value());
  CHECK(resolvable_witness(union_close(u3, {u3.all()})).has_value());
}

TEST_CASE("resolvability agrees with the two-coloring oracle") {
  for (int n = 1; n <= 4; ++n)
    for_each_small_family(n, [&](const pretopology& top) {
      CHECK(resolvable_witness(top).has_value() == oracles::resolvable(top));
    });
  CHECK(resolvable_witness(fixture_p6_topology()).has_value() ==
        oracles::resolvable(fixture_p6_topology()));
}

TEST_CASE("products") {
  universe_t u2 = points(2);
  universe_t u3 = points(3);
  pretopology d2 = union_close(u2, {1, 2});
  pretopology d3 = union_close(u3, {1, 2, 4});
  CHECK(product(d2, d3).opens().size() == 64);  // discrete on six points

  pretopology i2 = union_close(u2, {u2.all()});
  pretopology i3 = union_close(u3, {u3.all()});
  pretopology prod = product(i2, i3);
  // boxes with the empty set collapse: indiscrete plus empty
  CHECK(prod.opens().size() == 2);

  // P6 x P6 stays within the point cap; openness decided by the box criterion
  pretopology p6 = fixture_p6_topology();
  std::vector<mask_t> box_rows(6, 0);
  mask_t g03 = p6.universe().mask_of({"0", "3"});
  for (int i : mask_elements(g03)) box_rows[i] = g03;
  CHECK(product_open(p6, p6, box_rows));
  std::vector<mask_t> nonopen_rows(6, 0);
  nonopen_rows[0] = p6.universe().mask_of({"0"});
  CHECK_FALSE(product_open(p6, p6, nonopen_rows));

  int saved = caps().product_points;
  caps().product_points = 8;
  CHECK_THROWS_WITH_AS(product(p6, p6), doctest::Contains("CapExceeded"), error);
  caps().product_points = saved;
}
