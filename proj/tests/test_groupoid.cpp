#include "doctest.h"

#include <map>

#include "ghol/groupoid.hpp"

using namespace ghol;

TEST_CASE("pair groupoid composition") {
  auto g = FiniteGroupoid::pair_groupoid({"a", "b", "c"});
  g.check_laws();
  int ab = g.arrow_index("a>b");
  int bc = g.arrow_index("b>c");
  CHECK(g.arrow(g.compose(ab, bc)).id == "a>c");
  CHECK_THROWS_AS(g.compose(bc, ab), NonComposable);
  CHECK(g.inverse(ab) == g.arrow_index("b>a"));
}

TEST_CASE("gauge groupoid carries abelian phase payloads") {
  auto g = FiniteGroupoid::gauge_groupoid(2, 4);
  g.check_laws();
  // (x->y, 1/4) then (y->x, 1/2) = (x->x, 3/4)
  int a = g.arrow_index(Arrow::canonical_id("p0", "p1", Phase::turns(Rat(1, 4))));
  int b = g.arrow_index(Arrow::canonical_id("p1", "p0", Phase::turns(Rat(1, 2))));
  const Arrow& c = g.arrow(g.compose(a, b));
  CHECK(c.src == c.tgt);
  CHECK(c.phase->exact_turns() == Rat(3, 4));
}

TEST_CASE("three-object gauge groupoid, 1/3 then 1/4 gives 7/12") {
  auto g = FiniteGroupoid::gauge_groupoid(3, 12);
  int a = g.arrow_index(Arrow::canonical_id("p0", "p1", Phase::turns(Rat(1, 3))));
  int b = g.arrow_index(Arrow::canonical_id("p1", "p2", Phase::turns(Rat(1, 4))));
  const Arrow& c = g.arrow(g.compose(a, b));
  CHECK(c.phase->exact_turns() == Rat(7, 12));

  // brute-force oracle: every composite phase equals the sum of its parts
  for (int i = 0; i < g.num_arrows(); ++i)
    for (int j = 0; j < g.num_arrows(); ++j) {
      if (!g.composable(i, j)) continue;
      Phase expect = *g.arrow(i).phase + *g.arrow(j).phase;
      CHECK(g.arrow(g.compose(i, j)).phase->exact_turns() ==
            expect.exact_turns());
    }
}

TEST_CASE("n=1 gauge groupoid vertex group is the phase group") {
  auto g = FiniteGroupoid::gauge_groupoid(1, 6);
  auto [loops, table] = g.vertex_group(0);
  CHECK(static_cast<int>(loops.size()) == 6);
  auto iso = GroupTable::isomorphism(table, GroupTable::cyclic(6));
  REQUIRE(iso.has_value());
  CHECK(GroupTable::is_homomorphism(table, GroupTable::cyclic(6), *iso));
}

TEST_CASE("every vertex group of a gauge groupoid is the phase group") {
  auto g = FiniteGroupoid::gauge_groupoid(3, 4);
  for (int x = 0; x < g.num_objects(); ++x) {
    auto [loops, table] = g.vertex_group(x);
    CHECK(static_cast<int>(loops.size()) == 4);
    CHECK(GroupTable::isomorphism(table, GroupTable::cyclic(4)).has_value());
  }
}

TEST_CASE("twisted gauge groupoid is isomorphic to the trivial one") {
  // a nontrivial cocycle of phases over three points
  std::map<std::pair<int, int>, Phase> off;
  off[{0, 1}] = Phase::turns(Rat(1, 8));
  off[{1, 2}] = Phase::turns(Rat(1, 8));
  off[{0, 2}] = Phase::turns(Rat(1, 4));  // cocycle: off02 = off01+off12
  auto twisted = FiniteGroupoid::gauge_groupoid(3, 4, off);
  auto trivial = FiniteGroupoid::gauge_groupoid(3, 4);
  twisted.check_laws();

  // explicit isomorphism: shift arrows at point i by h_i = offset(i, 0)
  auto h = [&](int i) -> Phase {
    if (i == 0) return Phase();
    return -off[{0, i}];
  };
  std::vector<int> obj_map = {0, 1, 2};
  std::vector<int> arrow_map(twisted.num_arrows());
  for (int a = 0; a < twisted.num_arrows(); ++a) {
    const Arrow& arr = twisted.arrow(a);
    Phase mapped = *arr.phase + h(arr.src) - h(arr.tgt);
    arrow_map[a] = trivial.arrow_index(Arrow::canonical_id(
        twisted.object(arr.src), twisted.object(arr.tgt), mapped));
  }
  CHECK(FiniteGroupoid::is_isomorphism(twisted, trivial, obj_map, arrow_map));
}

TEST_CASE("generated subgroupoid: empty, transitive closure, phase mixing") {
  auto pg = share(FiniteGroupoid::pair_groupoid({"a", "b", "c", "d"}));

  auto none = generated_subgroupoid(pg, {});
  CHECK(none.is_wide());
  CHECK(static_cast<int>(none.arrows.size()) == 4);
  CHECK_FALSE(none.is_full());

  std::vector<int> path = {pg->arrow_index("a>b"), pg->arrow_index("b>c"),
                           pg->arrow_index("c>d")};
  auto full = generated_subgroupoid(pg, path);
  CHECK(full.is_full());
  CHECK(static_cast<int>(full.arrows.size()) == 16);
  full.check_closed();

  auto gg = share(FiniteGroupoid::gauge_groupoid(2, 6));
  int g1 = gg->arrow_index(Arrow::canonical_id("p0", "p1", Phase::turns(Rat(1, 2))));
  int g2 = gg->arrow_index(Arrow::canonical_id("p0", "p1", Phase::turns(Rat(1, 3))));
  auto sub = generated_subgroupoid(gg, {g1, g2});
  // 1/2 - 1/3 = 1/6 appears in the vertex group
  int sixth = gg->arrow_index(Arrow::canonical_id("p0", "p0", Phase::turns(Rat(1, 6))));
  CHECK(sub.contains_arrow(sixth));

  // idempotent and monotone
  std::vector<int> regen = sub.arrows;
  auto again = generated_subgroupoid(gg, regen);
  CHECK(again == sub);
  auto smaller = generated_subgroupoid(gg, {g1});
  for (int a : smaller.arrows) CHECK(sub.contains_arrow(a));
}

TEST_CASE("wide and full predicates") {
  auto pg = share(FiniteGroupoid::pair_groupoid({"x", "y"}));
  auto disc = discrete_subgroupoid(pg);
  CHECK(disc.is_wide());
  CHECK_FALSE(disc.is_full());
  auto restr = full_subgroupoid(pg, {0});
  CHECK_FALSE(restr.is_wide());
  CHECK(restr.is_full());
  CHECK_THROWS_AS(restr.vertex_group(1), UnknownObject);
}
