#include "ghol/gerbe.hpp"

#include <algorithm>

namespace ghol {

namespace {

// sign of the permutation sorting three distinct ints, with sorted key
std::pair<std::array<int, 3>, int> sort3(int i, int j, int k) {
  std::array<int, 3> key{i, j, k};
  int sign = 1;
  if (key[0] > key[1]) {
    std::swap(key[0], key[1]);
    sign = -sign;
  }
  if (key[1] > key[2]) {
    std::swap(key[1], key[2]);
    sign = -sign;
  }
  if (key[0] > key[1]) {
    std::swap(key[0], key[1]);
    sign = -sign;
  }
  return {key, sign};
}

std::array<int, 2> sorted_pair(int i, int j) {
  return i < j ? std::array<int, 2>{i, j} : std::array<int, 2>{j, i};
}

}  // namespace

Phase GerbeData::theta_vertex(int i, int j, int k, int vertex) const {
  if (i == j || j == k || i == k) return Phase();
  auto [key, sign] = sort3(i, j, k);
  auto it = theta.find(key);
  if (it == theta.end()) return Phase();
  auto vt = it->second.find(vertex);
  if (vt == it->second.end()) return Phase();
  return sign > 0 ? vt->second : -vt->second;
}

Rat GerbeData::a_along(int i, int j, int side) const {
  if (i == j) return Rat(0);
  auto it = a.find(sorted_pair(i, j));
  if (it == a.end()) return Rat(0);
  Rat v = it->second.along(side);
  return i < j ? v : -v;
}

Rat GerbeData::f_at(int chart, int face) const {
  auto it = f.find(chart);
  if (it == f.end()) throw InvalidGerbe("no curving on chart " +
                                        space->chart_name(chart));
  return it->second.at(face);
}

GerbeData GerbeData::trivial(std::shared_ptr<const CoveredSpace> space) {
  GerbeData g;
  g.space = std::move(space);
  for (int c = 0; c < g.space->num_charts(); ++c) {
    DiscreteForm curving;
    curving.degree = 2;
    curving.chart = c;
    g.f[c] = curving;
  }
  return g;
}

GerbeData GerbeData::flat_torus(std::shared_ptr<const CoveredSpace> space,
                                const Rat& flux) {
  GerbeData g = trivial(std::move(space));
  const CellComplex& cx = g.space->complex();
  int n = cx.num_faces();
  for (int c = 0; c < g.space->num_charts(); ++c) {
    DiscreteForm curving;
    curving.degree = 2;
    curving.chart = c;
    for (int face = 0; face < n; ++face)
      curving.values[face] = Rat(flux.num(), flux.den() * n);
    g.f[c] = curving;
  }
  return g;
}

ValidationReport validate_gerbe(const GerbeData& gerbe, double tol) {
  ValidationReport rep;
  const CoveredSpace& space = *gerbe.space;
  const CellComplex& cx = space.complex();

  // delta theta = 1 on quadruple overlaps
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 4) continue;
    int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2],
        l = entry.charts[3];
    for (int v : space.overlap_vertices(entry.charts)) {
      ++rep.checks;
      Phase total = gerbe.theta_vertex(j, k, l, v) -
                    gerbe.theta_vertex(i, k, l, v) +
                    gerbe.theta_vertex(i, j, l, v) -
                    gerbe.theta_vertex(i, j, k, v);
      if (!total.approx_equal(Phase(), tol))
        rep.fail("delta theta at vertex " + cx.vertex_name(v) + " on (" +
                     space.chart_name(i) + space.chart_name(j) +
                     space.chart_name(k) + space.chart_name(l) + ")",
                 "delta theta = " + total.str());
    }
  }
  // A relation on triple overlaps: A_ij + A_jk + A_ki = -d theta_ijk
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 3) continue;
    int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2];
    for (int e : space.overlap_edges(entry.charts)) {
      ++rep.checks;
      Rat lhs = gerbe.a_along(i, j, e) + gerbe.a_along(j, k, e) +
                gerbe.a_along(k, i, e);
      Phase rhs = -(gerbe.theta_vertex(i, j, k, cx.edge(e).head) -
                    gerbe.theta_vertex(i, j, k, cx.edge(e).tail));
      if (!Phase::turns(lhs).approx_equal(rhs, tol))
        rep.fail("A relation on edge " + cx.vertex_name(cx.edge(e).tail) + ">" +
                     cx.vertex_name(cx.edge(e).head),
                 "sum A = " + Phase::turns(lhs).str() + " but -d log theta = " +
                     rhs.str());
    }
  }
  // F_i - F_j = dA_ij on double overlaps
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 2) continue;
    int i = entry.charts[0], j = entry.charts[1];
    for (int face : space.overlap_faces(entry.charts)) {
      ++rep.checks;
      Rat lhs = gerbe.f_at(i, face) - gerbe.f_at(j, face);
      Rat rhs(0);
      for (int side : cx.face(face).sides) rhs += gerbe.a_along(i, j, side);
      if (lhs != rhs)
        rep.fail("curving relation on face " + std::to_string(face),
                 "F_i - F_j = " + lhs.str() + " but dA_ij = " + rhs.str());
    }
  }
  return rep;
}

Rat DeligneCochain::h_vertex(int i, int j, int vertex) const {
  if (i == j) return Rat(0);
  auto it = h.find(sorted_pair(i, j));
  if (it == h.end()) return Rat(0);
  auto vt = it->second.find(vertex);
  if (vt == it->second.end()) return Rat(0);
  return i < j ? vt->second : -vt->second;
}

GerbeData apply_coboundary(const GerbeData& gerbe, const DeligneCochain& c) {
  GerbeData out = gerbe;
  const CoveredSpace& space = *gerbe.space;
  const CellComplex& cx = space.complex();

  // theta' = theta - (h_ij + h_jk + h_ki) on triple overlaps
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 3) continue;
    int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2];
    auto& table = out.theta[{i, j, k}];
    for (int v : space.overlap_vertices(entry.charts)) {
      Rat delta = c.h_vertex(i, j, v) + c.h_vertex(j, k, v) +
                  c.h_vertex(k, i, v);
      table[v] = gerbe.theta_vertex(i, j, k, v) - Phase::turns(delta);
    }
  }
  // A' = A + dh + (chi_i - chi_j) on double overlaps
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 2) continue;
    int i = entry.charts[0], j = entry.charts[1];
    DiscreteForm form;
    form.degree = 1;
    for (int e : space.overlap_edges(entry.charts)) {
      Rat dh = c.h_vertex(i, j, cx.edge(e).head) -
               c.h_vertex(i, j, cx.edge(e).tail);
      Rat chi_i = c.chi.count(i) ? c.chi.at(i).at(e) : Rat(0);
      Rat chi_j = c.chi.count(j) ? c.chi.at(j).at(e) : Rat(0);
      Rat value = gerbe.a_along(i, j, e) + dh + chi_i - chi_j;
      if (!value.is_zero()) form.values[e] = value;
    }
    out.a[{i, j}] = std::move(form);
  }
  // F' = F + d chi per chart
  for (int chart = 0; chart < space.num_charts(); ++chart) {
    if (!c.chi.count(chart)) continue;
    DiscreteForm dchi = d(cx, c.chi.at(chart));
    auto it = out.f.find(chart);
    if (it == out.f.end()) throw InvalidGerbe("coboundary on missing curving");
    it->second = it->second + dchi;
  }
  return out;
}

LineBundleData apply_gauge(const LineBundleData& bundle,
                           const std::map<int, std::map<int, Rat>>& chi) {
  LineBundleData out = bundle;
  const CoveredSpace& space = *bundle.space;
  const CellComplex& cx = space.complex();
  auto chi_at = [&](int chart, int v) -> Rat {
    auto it = chi.find(chart);
    if (it == chi.end()) return Rat(0);
    auto vt = it->second.find(v);
    return vt == it->second.end() ? Rat(0) : vt->second;
  };
  for (auto& [chart, form] : out.conn) {
    for (int e : space.chart(chart).edges) {
      Rat dchi = chi_at(chart, cx.edge(e).head) - chi_at(chart, cx.edge(e).tail);
      Rat value = form.at(e) + dchi;
      if (value.is_zero())
        form.values.erase(e);
      else
        form.values[e] = value;
    }
  }
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 2) continue;
    int i = entry.charts[0], j = entry.charts[1];
    auto& table = out.g[{i, j}];
    for (int v : space.overlap_vertices(entry.charts))
      table[v] =
          bundle.g_vertex(i, j, v) + Phase::turns(chi_at(i, v) - chi_at(j, v));
  }
  return out;
}

}  // namespace ghol
