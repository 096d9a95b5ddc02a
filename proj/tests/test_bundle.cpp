#include "doctest.h"

#include <cmath>
#include <random>

#include "ghol/gerbe.hpp"
#include "ghol/transport.hpp"

using namespace ghol;

namespace {

ThinPath equator_north(std::shared_ptr<const CoveredSpace> space) {
  return ThinPath::smooth(space,
                          {{0, Curve::latitude(kTwoPi / 4, 0, kTwoPi), Reparam{}}});
}

ThinPath octa_equator(std::shared_ptr<const CoveredSpace> space, int chart) {
  // equator edges 4..7 around e0(=vertex 1) .. e3
  std::vector<Step> steps;
  for (int k = 0; k < 4; ++k) steps.push_back({4 + k, chart});
  return ThinPath::combinatorial(space, 1, steps);
}

}  // namespace

TEST_CASE("analytic circle bundle: component-wise transitions, arc additivity") {
  auto space = std::make_shared<const CoveredSpace>(
      CoveredSpace::analytic(AnalyticSpace::circle_two_charts()));
  LineBundleData b = LineBundleData::trivial(space);
  // a global constant 1-form c du; transitions constant per overlap
  // component (component 0 near angle 0.5 turns, component 1 near 0)
  double c = 0.35;
  b.conn_an[0] = AnalyticOneForm::constant(c, 0);
  b.conn_an[1] = AnalyticOneForm::constant(c, 0);
  // distinct constants per overlap component: their mismatch is the flux
  b.g_an[{0, 1}] = {TransitionFn::constant_phase(Phase::turns(Rat(1, 5))),
                    TransitionFn::constant_phase(Phase::turns(Rat(1, 3)))};
  CHECK(validate_bundle(b).pass);

  // quarter arcs concatenate: transport adds segment phases exactly
  ThinPath q1 = ThinPath::smooth(
      space, {{0, Curve::circle_arc(0.0, kTwoPi / 4), Reparam{}}});
  ThinPath q2 = ThinPath::smooth(
      space, {{0, Curve::circle_arc(kTwoPi / 4, kTwoPi / 2), Reparam{}}});
  Phase half = transport(b, concat(q1, q2)).value;
  Phase sum = transport(b, q1).value + transport(b, q2).value;
  CHECK(half.approx_equal(sum, 1e-9));
  CHECK(half.approx_equal(Phase::radians(c * kTwoPi / 2), 1e-9));

  // a full loop split across both charts crosses one junction in each
  // overlap component: holonomy = c * 2pi + (1/3 - 1/5) turns
  ThinPath loop = ThinPath::smooth(
      space, {{0, Curve::circle_arc(0.0, kTwoPi * 0.47), Reparam{}},
              {1, Curve::circle_arc(kTwoPi * 0.47, kTwoPi * 0.97), Reparam{}},
              {0, Curve::circle_arc(kTwoPi * 0.97, kTwoPi), Reparam{}}});
  Phase expect = Phase::radians(c * kTwoPi) + Phase::turns(Rat(2, 15));
  CHECK(holonomy(b, loop).approx_equal(expect, 1e-9));

  // constant gauge shift per chart: g_ij moves by chi_i - chi_j, loop
  // holonomies stay put (analytic backend, quadrature tolerance)
  Phase chi0 = Phase::turns(Rat(3, 7)), chi1 = Phase::turns(Rat(1, 6));
  LineBundleData moved = b;
  moved.g_an[{0, 1}] = {
      TransitionFn::constant_phase(Phase::turns(Rat(1, 5)) + chi0 - chi1),
      TransitionFn::constant_phase(Phase::turns(Rat(1, 3)) + chi0 - chi1)};
  CHECK(validate_bundle(moved).pass);
  CHECK(holonomy(moved, loop).approx_equal(expect, 1e-9));
  // and the breakdown lists the chart transitions
  auto res = transport(b, loop);
  int transitions = 0;
  for (const auto& piece : res.breakdown)
    if (piece.what.find("transition") != std::string::npos) ++transitions;
  CHECK(transitions == 2);
}

TEST_CASE("discrete monopole: the coboundary of A matches F per face") {
  for (int n : {1, 2}) {
    LineBundleData b = LineBundleData::monopole_octahedron(n);
    const CellComplex& cx = b.space->complex();
    DiscreteForm f_north = d(cx, b.conn_form(0));
    for (int face : b.space->chart(0).faces)
      CHECK(f_north.at(face) == Rat(n, 8));
    DiscreteForm f_south = d(cx, b.conn_form(1));
    for (int face : b.space->chart(1).faces)
      CHECK(f_south.at(face) == Rat(n, 8));
  }
}

TEST_CASE("combinatorial transport breakdown lists transition insertions") {
  LineBundleData b = LineBundleData::monopole_octahedron(1);
  // half equator in the north gauge, half in the south gauge
  ThinPath split = ThinPath::combinatorial(
      b.space, 1, {{4, 0}, {5, 0}, {6, 1}, {7, 1}});
  auto res = transport(b, split);
  bool found = false;
  for (const auto& piece : res.breakdown)
    if (piece.what.find("transition N>S") != std::string::npos) found = true;
  CHECK(found);
  CHECK(res.value == holonomy(b, octa_equator(b.space, 0)));
}

TEST_CASE("trivial bundle transports everything to zero") {
  auto space = std::make_shared<const CoveredSpace>(make_circle_two_arcs(12));
  LineBundleData b = LineBundleData::trivial(space);
  CHECK(validate_bundle(b).pass);
  std::vector<Step> loop;
  for (int e = 0; e < 6; ++e) loop.push_back({e, 0});
  for (int e = 6; e < 12; ++e) loop.push_back({e, 1});
  ThinPath p = ThinPath::combinatorial(space, 0, loop);
  CHECK(holonomy(b, p).is_zero());
  ThinPath open_path = ThinPath::combinatorial(space, 0, {{0, 0}});
  CHECK_THROWS_AS(holonomy(b, open_path), NotClosed);
}

TEST_CASE("octahedron monopole: validation and exact equator holonomy") {
  for (int n : {1, 2, 3}) {
    LineBundleData b = LineBundleData::monopole_octahedron(n);
    auto rep = validate_bundle(b);
    CHECK(rep.pass);
    // equator in the north gauge
    Phase hol = holonomy(b, octa_equator(b.space, 0));
    CHECK(hol.exact_turns() == Rat(n, 2).mod1());
    // same loop routed through the south gauge: chart-refinement invariance
    Phase hol_s = holonomy(b, octa_equator(b.space, 1));
    CHECK(hol == hol_s);
    // total curvature is 2 pi n exactly
    CHECK(total_curvature_radians(b) == doctest::Approx(kTwoPi * n).epsilon(1e-12));
  }
}

TEST_CASE("octahedron monopole: corrupt transition localizes the failure") {
  LineBundleData b = LineBundleData::monopole_octahedron(1);
  b.g[{0, 1}][2] = b.g[{0, 1}][2] + Phase::turns(Rat(1, 10));
  auto rep = validate_bundle(b);
  CHECK_FALSE(rep.pass);
  REQUIRE(!rep.issues.empty());
  bool located = false;
  for (const auto& issue : rep.issues)
    if (issue.where.find("e1") != std::string::npos) located = true;
  CHECK(located);
}

TEST_CASE("analytic monopole: validation, equator quadrature, latitudes") {
  for (int n : {1, 2, 3}) {
    LineBundleData b = LineBundleData::monopole_sphere(n);
    auto rep = validate_bundle(b);
    CHECK(rep.pass);
    Phase eq = holonomy(b, equator_north(b.space));
    CHECK(eq.approx_equal(Phase::turns(Rat(n, 2)), 1e-9));
    CHECK(std::fabs(total_curvature_radians(b) - kTwoPi * n) < 1e-9);
  }
  // latitude loops: quadrature against the closed form (n/2)(1-cos t) turns
  LineBundleData b = LineBundleData::monopole_sphere(1);
  for (double theta : {0.5, kTwoPi / 6, kTwoPi / 4, 1.9}) {
    ThinPath lat = ThinPath::smooth(
        b.space, {{0, Curve::latitude(theta, 0, kTwoPi), Reparam{}}});
    double expect = 0.5 * (1.0 - std::cos(theta));
    CHECK(holonomy(b, lat).approx_equal(Phase::turns(expect), 1e-9));
  }
}

TEST_CASE("analytic monopole: cross-chart equator agrees with one-chart") {
  LineBundleData b = LineBundleData::monopole_sphere(1);
  double eq = kTwoPi / 4;
  ThinPath split = ThinPath::smooth(
      b.space, {{0, Curve::latitude(eq, 0, kTwoPi / 2), Reparam{}},
                {1, Curve::latitude(eq, kTwoPi / 2, kTwoPi), Reparam{}}});
  Phase a = holonomy(b, split);
  Phase bb = holonomy(b, equator_north(b.space));
  CHECK(a.approx_equal(bb, 1e-9));
}

TEST_CASE("reparametrization leaves transport invariant (quadrature)") {
  LineBundleData b = LineBundleData::monopole_sphere(1);
  ThinPath lat = equator_north(b.space);
  Phase base = holonomy(b, lat);
  for (const char* name : {"square", "cubic", "smoothstep"}) {
    Phase redone = holonomy(b, reparametrize(lat, Reparam::named(name)));
    CHECK(redone.approx_equal(base, 1e-9));
  }
  // reverse inverts holonomy
  CHECK(holonomy(b, reverse(lat)).approx_equal(-base, 1e-9));
}

TEST_CASE("smooth backtrack padding cancels within tolerance") {
  LineBundleData b = LineBundleData::monopole_sphere(2);
  double eq = kTwoPi / 4;
  SmoothSegment fwd{0, Curve::latitude(eq, 0, 0.7), Reparam{}};
  SmoothSegment back{0, Curve::latitude(eq, 0.7, 0.0), Reparam{}};
  SmoothSegment whole{0, Curve::latitude(eq, 0, kTwoPi), Reparam{}};
  ThinPath plain = ThinPath::smooth(b.space, {whole});
  ThinPath padded = ThinPath::smooth(b.space, {fwd, back, whole});
  CHECK(holonomy(b, padded).approx_equal(holonomy(b, plain), 1e-9));
}

TEST_CASE("combinatorial thin invariance: raw padded steps match exactly") {
  LineBundleData b = LineBundleData::monopole_octahedron(1);
  ThinPath loop = octa_equator(b.space, 0);
  Phase base = holonomy(b, loop);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Step> steps(loop.steps().begin(), loop.steps().end());
    // insert a backtrack at a random position: some edge out of the
    // current vertex, then straight back (charted wherever it lives)
    std::uniform_int_distribution<std::size_t> at(0, steps.size());
    std::size_t pos = at(rng);
    int vertex = 1;
    {
      ThinPath prefix = ThinPath::combinatorial(
          b.space, 1, std::vector<Step>(steps.begin(), steps.begin() + pos));
      vertex = prefix.end_vertex();
    }
    const CellComplex& cx = b.space->complex();
    auto incident = cx.edges_at(vertex);
    std::uniform_int_distribution<std::size_t> pick(0, incident.size() - 1);
    int e = incident[pick(rng)];
    int side = cx.edge(e).tail == vertex ? e : ~e;
    int chart = b.space->chart(0).has_edge(e) ? 0 : 1;
    steps.insert(steps.begin() + pos, {~side, chart});
    steps.insert(steps.begin() + pos, {side, chart});
    Phase padded = transport_steps_raw(b, 1, steps);
    CHECK(padded.exact_turns() == base.exact_turns());
    // and via the normalizing constructor
    ThinPath normalized = ThinPath::combinatorial(b.space, 1, steps);
    CHECK(holonomy(b, normalized).exact_turns() == base.exact_turns());
  }
}

TEST_CASE("gauge invariance: loop holonomies survive random gauge moves") {
  LineBundleData b = LineBundleData::monopole_octahedron(1);
  ThinPath loop = octa_equator(b.space, 0);
  Phase base = holonomy(b, loop);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::map<int, std::map<int, Rat>> chi;
    for (int c = 0; c < b.space->num_charts(); ++c)
      for (int v : b.space->chart(c).vertices)
        chi[c][v] = Rat(num(rng), 12);
    LineBundleData moved = apply_gauge(b, chi);
    CHECK(validate_bundle(moved).pass);
    CHECK(holonomy(moved, loop).exact_turns() == base.exact_turns());
  }
}

TEST_CASE("flat torus bundle: winding loop reads the declared flux") {
  auto space = std::make_shared<const CoveredSpace>(make_torus_four_charts(4, 4));
  LineBundleData b = LineBundleData::flat_torus(space, Rat(1, 3), Rat(2, 5));
  CHECK(validate_bundle(b).pass);
  auto vid = [&](int i, int j) { return i * 4 + j; };
  auto hedge = [&](int i, int j) { return 2 * vid(i, j); };
  auto vedge = [&](int i, int j) { return 2 * vid(i, j) + 1; };
  std::vector<Step> xloop = {{hedge(0, 0), 0}, {hedge(1, 0), 0},
                             {hedge(2, 0), 1}, {hedge(3, 0), 1}};
  ThinPath px = ThinPath::combinatorial(space, 0, xloop);
  CHECK(holonomy(b, px).exact_turns() == Rat(1, 3));
  std::vector<Step> yloop = {{vedge(0, 0), 0}, {vedge(0, 1), 0},
                             {vedge(0, 2), 2}, {vedge(0, 3), 2}};
  ThinPath py = ThinPath::combinatorial(space, 0, yloop);
  CHECK(holonomy(b, py).exact_turns() == Rat(2, 5));
  // concatenation is additive on the nose
  Phase sum = holonomy(b, concat(px, py));
  CHECK(sum.exact_turns() == (Rat(1, 3) + Rat(2, 5)).mod1());
}

TEST_CASE("partial transport follows the halving transport law") {
  LineBundleData b = LineBundleData::monopole_octahedron(1);
  // two half-equators with equal step counts
  auto space = b.space;
  ThinPath first = ThinPath::combinatorial(space, 1, {{4, 0}, {5, 0}});
  ThinPath second = ThinPath::combinatorial(space, 3, {{6, 0}, {7, 0}});
  ThinPath both = concat(first, second);
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    Phase lhs = partial_transport(b, both, t);
    Phase rhs = t <= 0.5 ? partial_transport(b, first, 2 * t)
                         : partial_transport(b, second, 2 * t - 1) +
                               partial_transport(b, first, 1.0);
    CHECK(lhs.exact_turns() == rhs.exact_turns());
  }
  // smooth version at the equator of the analytic monopole
  LineBundleData an = LineBundleData::monopole_sphere(1);
  double eq = kTwoPi / 4;
  ThinPath sf = ThinPath::smooth(an.space,
                                 {{0, Curve::latitude(eq, 0, kTwoPi / 2), Reparam{}}});
  ThinPath ss = ThinPath::smooth(
      an.space, {{0, Curve::latitude(eq, kTwoPi / 2, kTwoPi), Reparam{}}});
  ThinPath sboth = concat(sf, ss);
  for (double t : {0.2, 0.5, 0.8}) {
    Phase lhs = partial_transport(an, sboth, t);
    Phase rhs = t <= 0.5 ? partial_transport(an, sf, 2 * t)
                         : partial_transport(an, ss, 2 * t - 1) +
                               partial_transport(an, sf, 1.0);
    CHECK(lhs.approx_equal(rhs, 1e-9));
  }
}

TEST_CASE("thin path double groupoid over the trivial bundle is degenerate") {
  auto space = std::make_shared<const CoveredSpace>(make_interval_two_arcs(9));
  LineBundleData b = LineBundleData::trivial(space);
  std::vector<ThinPath> gens;
  gens.push_back(ThinPath::combinatorial(space, 0, {{0, 0}, {1, 0}}));
  gens.push_back(ThinPath::combinatorial(space, 2, {{2, 0}, {3, 0}}));
  ThinPathDouble tpd =
      thin_path_double_groupoid(b, gens, PathClassMode::ThinClasses);
  for (const Arrow& a : tpd.dg.horiz().arrows())
    CHECK(a.phase->is_zero());
  CHECK(check_transport_law(tpd.cp, tpd.dg).pass);
  CHECK(tpd.dg.check_laws().pass);
}

TEST_CASE("monopole latitude family: transport law holds, corruption fails") {
  LineBundleData b = LineBundleData::monopole_sphere(1);
  // latitude loops at rational-phase colatitudes: phases 1/4, 1/2, 3/4
  std::vector<ThinPath> gens;
  for (double theta : {kTwoPi / 6, kTwoPi / 4, kTwoPi / 3})
    gens.push_back(ThinPath::smooth(
        b.space, {{0, Curve::latitude(theta, 0, kTwoPi), Reparam{}}}));
  ThinPathDouble tpd =
      thin_path_double_groupoid(b, gens, PathClassMode::TransportClasses);
  auto rep = check_transport_law(tpd.cp, tpd.dg);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked >= 9);
  CHECK(tpd.dg.check_laws().pass);

  // fault injection: corrupt one transport square's payload
  ConnectionPair bad = tpd.cp;
  int victim = -1;
  for (const auto& [v, s] : bad.upsilon) {
    (void)s;
    if (!tpd.dg.vert().arrow(v).id.ends_with("|0.000000000]"))
      victim = v;
  }
  REQUIRE(victim >= 0);
  bad.upsilon[victim].payload =
      SquarePayload::from_phase(Phase::turns(Rat(1, 7)));
  auto bad_rep = check_transport_law(bad, tpd.dg);
  CHECK_FALSE(bad_rep.pass);
}
