#include "doctest.h"

#include "ghol/cover.hpp"
#include "ghol/forms.hpp"

using namespace ghol;

TEST_CASE("circle two arcs: overlap has two components, not good") {
  CoveredSpace cs = make_circle_two_arcs(12);
  REQUIRE(cs.num_charts() == 2);
  bool found_pair = false;
  for (const NerveEntry& e : cs.nerve()) {
    if (e.charts.size() == 2) {
      found_pair = true;
      CHECK(e.num_components == 2);
      CHECK_FALSE(e.contractible);
    } else {
      CHECK(e.contractible);
    }
  }
  CHECK(found_pair);
  CHECK_FALSE(cs.good());
  CHECK_THROWS_AS(
      CoveredSpace::combinatorial(make_cycle_graph(12),
                                  {cs.chart(0), cs.chart(1)}, true),
      NotGood);
}

TEST_CASE("interval two arcs is good") {
  CoveredSpace cs = make_interval_two_arcs(9);
  CHECK(cs.good());
  for (const NerveEntry& e : cs.nerve())
    if (e.charts.size() == 2) CHECK(e.num_components == 1);
}

TEST_CASE("bad nerve: chart that is not a subcomplex") {
  CellComplex cx = make_path_graph(3);
  Chart broken{"X", {0}, {0}, {}};  // edge 0 without vertex 1
  Chart rest{"Y", {0, 1, 2}, {0, 1}, {}};
  CHECK_THROWS_AS(CoveredSpace::combinatorial(cx, {broken, rest}), BadNerve);
}

TEST_CASE("octahedron two charts: equator overlap is a circle") {
  CoveredSpace cs = make_octahedron_two_charts();
  for (const NerveEntry& e : cs.nerve()) {
    if (e.charts.size() == 2) {
      CHECK(e.num_components == 1);
      CHECK_FALSE(e.contractible);  // the band retracts to a circle
    } else {
      CHECK(e.contractible);
    }
  }
}

TEST_CASE("three-torus eight charts: nerve counts match direct enumeration") {
  CoveredSpace cs = make_three_torus_eight_charts(4);
  REQUIRE(cs.num_charts() == 8);
  // oracle: every p-tuple of the 8 box charts intersects (per axis the
  // patches {0,1,2} and {2,3,0} always share a coordinate), so the nerve
  // up to p=4 has C(8,1)+C(8,2)+C(8,3)+C(8,4) entries
  int ones = 0, twos = 0, threes = 0, fours = 0;
  for (const NerveEntry& e : cs.nerve()) {
    switch (e.charts.size()) {
      case 1: ++ones; break;
      case 2: ++twos; break;
      case 3: ++threes; break;
      case 4: ++fours; break;
    }
  }
  CHECK(ones == 8);
  CHECK(twos == 28);
  CHECK(threes == 56);
  CHECK(fours == 70);
  // components multiply per disagreeing axis: opposite charts give 2^3
  for (const NerveEntry& e : cs.nerve()) {
    if (e.charts == std::vector<int>{0, 7})
      CHECK(e.num_components == 8);
    if (e.charts == std::vector<int>{0, 1})
      CHECK(e.num_components == 2);
  }
}

TEST_CASE("analytic builtins declare their nerves") {
  CoveredSpace sphere = CoveredSpace::analytic(AnalyticSpace::sphere_two_charts());
  CHECK(sphere.good());
  CHECK(sphere.nerve().size() == 3);
  CoveredSpace circle = CoveredSpace::analytic(AnalyticSpace::circle_two_charts());
  CHECK_FALSE(circle.good());
  for (const NerveEntry& e : circle.nerve())
    if (e.charts.size() == 2) CHECK(e.num_components == 2);
}

TEST_CASE("coboundary operator: d-squared vanishes and Stokes holds") {
  CellComplex cx = make_torus_grid(4, 4);
  DiscreteForm f0;
  f0.degree = 0;
  // a scattered 0-form
  for (int v = 0; v < cx.num_vertices(); ++v)
    f0.values[v] = Rat((v * 7) % 5, 3);
  DiscreteForm f1 = d(cx, f0);
  DiscreteForm f2 = d(cx, f1);
  for (const auto& [cell, v] : f2.values) {
    (void)cell;
    CHECK(v.is_zero());
  }
  CHECK_THROWS_AS(d(cx, f2), DegreeOverflow);

  // Stokes per face: the boundary sum of a 1-form equals its d on the face
  DiscreteForm a;
  a.degree = 1;
  for (int e = 0; e < cx.num_edges(); ++e) a.values[e] = Rat(e % 7, 4);
  DiscreteForm da = d(cx, a);
  for (int face = 0; face < cx.num_faces(); ++face) {
    Rat boundary(0);
    for (int side : cx.face(face).sides) boundary += a.along(side);
    CHECK(boundary == da.at(face));
  }
}
