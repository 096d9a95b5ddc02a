#include "ghol/bundle.hpp"

#include <algorithm>
#include <cmath>

namespace ghol {

namespace {

std::array<int, 2> sorted_pair(int i, int j) {
  return i < j ? std::array<int, 2>{i, j} : std::array<int, 2>{j, i};
}

}  // namespace

Phase LineBundleData::g_vertex(int i, int j, int vertex) const {
  if (i == j) return Phase();
  auto it = g.find(sorted_pair(i, j));
  Phase val;
  if (it != g.end()) {
    auto vt = it->second.find(vertex);
    if (vt != it->second.end()) val = vt->second;
  }
  return i < j ? val : -val;
}

Phase LineBundleData::g_point(int i, int j, const Pt& p) const {
  if (i == j) return Phase();
  auto it = g_an.find(sorted_pair(i, j));
  if (it == g_an.end()) return Phase();
  int comp = space->analytic_space().overlap_component(std::min(i, j),
                                                       std::max(i, j), p);
  if (comp >= static_cast<int>(it->second.size())) comp = 0;
  Phase val = it->second[comp].eval(p);
  return i < j ? val : -val;
}

const DiscreteForm& LineBundleData::conn_form(int chart) const {
  auto it = conn.find(chart);
  if (it == conn.end())
    throw InvalidBundle("no connection form on chart " +
                        space->chart_name(chart));
  return it->second;
}

const AnalyticOneForm& LineBundleData::conn_analytic(int chart) const {
  auto it = conn_an.find(chart);
  if (it == conn_an.end())
    throw InvalidBundle("no connection form on chart " +
                        space->chart_name(chart));
  return it->second;
}

LineBundleData LineBundleData::trivial(
    std::shared_ptr<const CoveredSpace> space) {
  LineBundleData b;
  b.space = std::move(space);
  if (b.space->is_combinatorial()) {
    for (int c = 0; c < b.space->num_charts(); ++c) {
      DiscreteForm f;
      f.degree = 1;
      f.chart = c;
      b.conn[c] = f;
    }
  } else {
    for (int c = 0; c < b.space->num_charts(); ++c) {
      b.conn_an[c] = AnalyticOneForm::zero();
      b.curv_an[c] = AnalyticTwoForm::zero();
    }
  }
  return b;
}

LineBundleData LineBundleData::monopole_octahedron(int n) {
  auto space = std::make_shared<const CoveredSpace>(make_octahedron_two_charts());
  LineBundleData b;
  b.space = space;
  DiscreteForm an, as;
  an.degree = as.degree = 1;
  an.chart = 0;
  as.chart = 1;
  for (int k = 0; k < 4; ++k) {
    an.values[4 + k] = Rat(n, 8);   // equator edges in the north gauge
    as.values[4 + k] = Rat(-n, 8);  // and in the south gauge
  }
  b.conn[0] = an;
  b.conn[1] = as;
  std::map<int, Phase> gvals;
  for (int k = 0; k < 4; ++k) {
    // equator vertices e0..e3 are complex vertices 1..4
    gvals[1 + k] = Phase::turns(Rat(n * k, 4));
  }
  b.g[{0, 1}] = std::move(gvals);
  return b;
}

LineBundleData LineBundleData::monopole_sphere(int n) {
  auto space =
      std::make_shared<const CoveredSpace>(CoveredSpace::analytic(
          AnalyticSpace::sphere_two_charts()));
  LineBundleData b;
  b.space = space;
  b.conn_an[0] = AnalyticOneForm::monopole_north(n);
  b.conn_an[1] = AnalyticOneForm::monopole_south(n);
  b.curv_an[0] = AnalyticTwoForm::monopole(n);
  b.curv_an[1] = AnalyticTwoForm::monopole(n);
  b.g_an[{0, 1}] = {TransitionFn::sphere_monopole(n)};
  return b;
}

LineBundleData LineBundleData::flat_torus(
    std::shared_ptr<const CoveredSpace> space, const Rat& flux_x,
    const Rat& flux_y) {
  LineBundleData b;
  b.space = std::move(space);
  const CellComplex& cx = b.space->complex();
  // global flat 1-form: horizontal edges carry flux_x / nx, vertical
  // edges flux_y / ny (edge ids: even horizontal, odd vertical)
  int n_faces = cx.num_faces();
  int nx = 0, ny = 0;
  // grid dimensions recovered from the naming convention of make_torus_grid
  for (int v = 0; v < cx.num_vertices(); ++v) {
    const std::string& name = cx.vertex_name(v);
    auto us = name.find('_');
    nx = std::max(nx, std::stoi(name.substr(1, us - 1)) + 1);
    ny = std::max(ny, std::stoi(name.substr(us + 1)) + 1);
  }
  if (nx * ny != n_faces) throw Error("flat_torus: not a torus grid cover");
  for (int c = 0; c < b.space->num_charts(); ++c) {
    DiscreteForm f;
    f.degree = 1;
    f.chart = c;
    for (int e : b.space->chart(c).edges)
      f.values[e] = (e % 2 == 0) ? Rat(flux_x.num(), flux_x.den() * nx)
                                 : Rat(flux_y.num(), flux_y.den() * ny);
    b.conn[c] = f;
  }
  // A_i = A_j on overlaps, so constant transitions; zero works
  for (const NerveEntry& entry : b.space->nerve())
    if (entry.charts.size() == 2) {
      std::map<int, Phase> zero;
      for (int v : b.space->overlap_vertices(entry.charts)) zero[v] = Phase();
      b.g[{entry.charts[0], entry.charts[1]}] = std::move(zero);
    }
  return b;
}

ValidationReport validate_bundle(const LineBundleData& bundle, double tol) {
  ValidationReport rep;
  const CoveredSpace& space = *bundle.space;

  if (space.is_combinatorial()) {
    const CellComplex& cx = space.complex();
    // stored transition tables must live on their overlap
    for (const auto& [pair, table] : bundle.g) {
      auto verts = space.overlap_vertices({pair[0], pair[1]});
      for (const auto& [v, phase] : table) {
        (void)phase;
        ++rep.checks;
        if (!std::binary_search(verts.begin(), verts.end(), v))
          rep.fail("g[" + space.chart_name(pair[0]) + "," +
                       space.chart_name(pair[1]) + "] vertex " +
                       cx.vertex_name(v),
                   "transition value outside the overlap");
      }
    }
    // cocycle on triple overlaps
    for (const NerveEntry& entry : space.nerve()) {
      if (entry.charts.size() != 3) continue;
      int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2];
      for (int v : space.overlap_vertices(entry.charts)) {
        ++rep.checks;
        Phase total = bundle.g_vertex(i, j, v) + bundle.g_vertex(j, k, v) +
                      bundle.g_vertex(k, i, v);
        if (!total.approx_equal(Phase(), tol))
          rep.fail("cocycle at vertex " + cx.vertex_name(v),
                   "g_ij g_jk g_ki = " + total.str());
      }
    }
    // compatibility A_i - A_j = dlog g_ij per overlap edge
    for (const NerveEntry& entry : space.nerve()) {
      if (entry.charts.size() != 2) continue;
      int i = entry.charts[0], j = entry.charts[1];
      const DiscreteForm& ai = bundle.conn_form(i);
      const DiscreteForm& aj = bundle.conn_form(j);
      for (int e : space.overlap_edges(entry.charts)) {
        ++rep.checks;
        Rat diff = ai.at(e) - aj.at(e);
        Phase lhs = Phase::turns(diff);
        Phase rhs = bundle.g_vertex(i, j, cx.edge(e).head) -
                    bundle.g_vertex(i, j, cx.edge(e).tail);
        if (!lhs.approx_equal(rhs, tol))
          rep.fail("compatibility on edge " + cx.vertex_name(cx.edge(e).tail) +
                       ">" + cx.vertex_name(cx.edge(e).head),
                   "A_i - A_j = " + lhs.str() + " but dlog g = " + rhs.str());
      }
    }
    return rep;
  }

  // analytic backend: sampled checks along overlap segments
  const AnalyticSpace& an = space.analytic_space();
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() == 2) {
      int i = entry.charts[0], j = entry.charts[1];
      for (const Curve& seg : an.overlap_check_segments(i, j)) {
        ++rep.checks;
        double delta =
            line_integral(bundle.conn_analytic(i), seg, 0, 1, bundle.quad) -
            line_integral(bundle.conn_analytic(j), seg, 0, 1, bundle.quad);
        Phase lhs = Phase::radians(delta);
        Phase rhs = bundle.g_point(i, j, seg.at(1.0)) -
                    bundle.g_point(i, j, seg.at(0.0));
        if (!lhs.approx_equal(rhs, tol))
          rep.fail("compatibility along " + seg.str(),
                   "int(A_i - A_j) = " + lhs.str() + " but dlog g = " +
                       rhs.str());
      }
    }
    if (entry.charts.size() == 3) {
      int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2];
      auto pts = an.overlap_samples(i, j, 8);
      for (const Pt& p : pts) {
        if (!an.contains(k, p)) continue;
        ++rep.checks;
        Phase total = bundle.g_point(i, j, p) + bundle.g_point(j, k, p) +
                      bundle.g_point(k, i, p);
        if (!total.approx_equal(Phase(), tol))
          rep.fail("cocycle near (" + std::to_string(p.u) + "," +
                       std::to_string(p.v) + ")",
                   "g_ij g_jk g_ki = " + total.str());
      }
    }
  }
  return rep;
}

double total_curvature_radians(const LineBundleData& bundle) {
  const CoveredSpace& space = *bundle.space;
  if (space.is_combinatorial()) {
    const CellComplex& cx = space.complex();
    Rat total(0);
    for (int f = 0; f < cx.num_faces(); ++f) {
      int chart = -1;
      for (int c = 0; c < space.num_charts(); ++c)
        if (space.chart(c).has_face(f)) {
          chart = c;
          break;
        }
      if (chart < 0) throw InvalidBundle("face not covered by any chart");
      DiscreteForm curv = d(cx, bundle.conn_form(chart));
      total += curv.at(f);
    }
    return total.to_double() * kTwoPi;
  }
  const AnalyticSpace& an = space.analytic_space();
  if (an.kind() != AnalyticSpace::Kind::Sphere2)
    throw Error("total curvature implemented for sphere-2-charts only");
  const double pi = kTwoPi / 2;
  double split = pi / 2;
  auto it_n = bundle.curv_an.find(0);
  auto it_s = bundle.curv_an.find(1);
  if (it_n == bundle.curv_an.end() || it_s == bundle.curv_an.end())
    throw InvalidBundle("no declared curvature forms");
  double north = surface_integral(it_n->second, {0, 0}, {split, kTwoPi},
                                  bundle.quad);
  double south = surface_integral(it_s->second, {split, 0}, {pi, kTwoPi},
                                  bundle.quad);
  return north + south;
}

}  // namespace ghol
