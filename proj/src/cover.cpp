#include "ghol/cover.hpp"

#include <algorithm>
#include <set>

namespace ghol {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

bool Chart::has_vertex(int v) const { return sorted_contains(vertices, v); }
bool Chart::has_edge(int e) const { return sorted_contains(edges, e); }
bool Chart::has_face(int f) const { return sorted_contains(faces, f); }

CoveredSpace CoveredSpace::combinatorial(CellComplex complex,
                                         std::vector<Chart> charts,
                                         bool require_good) {
  CoveredSpace cs;
  cs.backend_ = Backend::Combinatorial;
  cs.complex_ = std::move(complex);
  cs.charts_ = std::move(charts);
  for (Chart& c : cs.charts_) {
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.faces.begin(), c.faces.end());
    // charts must be subcomplexes
    for (int e : c.edges) {
      const auto& ed = cs.complex_.edge(e);
      if (!c.has_vertex(ed.tail) || !c.has_vertex(ed.head))
        throw BadNerve("chart " + c.name + " contains edge without endpoints");
    }
    for (int f : c.faces)
      for (int side : cs.complex_.face(f).sides)
        if (!c.has_edge(CellComplex::side_edge(side)))
          throw BadNerve("chart " + c.name + " contains face without its edges");
  }
  // every cell must be covered
  for (int v = 0; v < cs.complex_.num_vertices(); ++v) {
    bool covered = false;
    for (const Chart& c : cs.charts_) covered = covered || c.has_vertex(v);
    if (!covered)
      throw BadNerve("vertex " + cs.complex_.vertex_name(v) + " uncovered");
  }
  cs.compute_nerve_combinatorial();
  if (require_good && !cs.good_)
    throw NotGood("cover fails the combinatorial contractibility check");
  return cs;
}

CoveredSpace CoveredSpace::analytic(AnalyticSpace space) {
  CoveredSpace cs;
  cs.backend_ = Backend::Analytic;
  cs.analytic_ = std::move(space);
  for (const auto& entry : cs.analytic_->declared_nerve())
    cs.nerve_.push_back({entry.charts, entry.num_components, entry.contractible});
  cs.good_ = cs.analytic_->declared_good();
  // declared nerve must be downward closed
  std::set<std::vector<int>> present;
  for (const auto& e : cs.nerve_) present.insert(e.charts);
  for (const auto& e : cs.nerve_) {
    if (e.charts.size() < 2) continue;
    for (std::size_t skip = 0; skip < e.charts.size(); ++skip) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < e.charts.size(); ++i)
        if (i != skip) sub.push_back(e.charts[i]);
      if (!present.count(sub))
        throw BadNerve("declared nerve not downward closed");
    }
  }
  return cs;
}

void CoveredSpace::compute_nerve_combinatorial() {
  const int n = num_charts();
  good_ = true;
  std::vector<std::vector<int>> tuples;
  for (int i = 0; i < n; ++i) tuples.push_back({i});
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::vector<int> cur = tuples[t];
    if (cur.size() >= 4) continue;
    for (int next = cur.back() + 1; next < n; ++next) {
      std::vector<int> ext = cur;
      ext.push_back(next);
      tuples.push_back(ext);
    }
  }
  std::sort(tuples.begin(), tuples.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (const auto& tup : tuples) {
    std::vector<int> verts = overlap_vertices(tup);
    if (verts.empty()) continue;
    NerveEntry entry;
    entry.charts = tup;
    entry.num_components = static_cast<int>(complex_.components(verts).size());
    entry.contractible = complex_.collapses_to_point(verts, overlap_edges(tup),
                                                     overlap_faces(tup));
    if (!entry.contractible) good_ = false;
    nerve_.push_back(std::move(entry));
  }
}

const CellComplex& CoveredSpace::complex() const {
  if (backend_ != Backend::Combinatorial)
    throw Error("no cell complex on analytic backend");
  return complex_;
}

const Chart& CoveredSpace::chart(int i) const {
  if (backend_ != Backend::Combinatorial)
    throw Error("no combinatorial charts on analytic backend");
  return charts_.at(i);
}

const AnalyticSpace& CoveredSpace::analytic_space() const {
  if (!analytic_) throw Error("not an analytic space");
  return *analytic_;
}

int CoveredSpace::num_charts() const {
  return backend_ == Backend::Combinatorial
             ? static_cast<int>(charts_.size())
             : analytic_->num_charts();
}

const std::string& CoveredSpace::chart_name(int i) const {
  return backend_ == Backend::Combinatorial ? charts_.at(i).name
                                            : analytic_->chart_name(i);
}

int CoveredSpace::chart_index(const std::string& name) const {
  for (int i = 0; i < num_charts(); ++i)
    if (chart_name(i) == name) return i;
  throw ChartMismatch("unknown chart: " + name);
}

std::vector<int> CoveredSpace::overlap_vertices(
    const std::vector<int>& charts) const {
  std::vector<int> out = charts_.at(charts.at(0)).vertices;
  for (std::size_t i = 1; i < charts.size(); ++i)
    out = intersect_sorted(out, charts_.at(charts[i]).vertices);
  return out;
}

std::vector<int> CoveredSpace::overlap_edges(
    const std::vector<int>& charts) const {
  std::vector<int> out = charts_.at(charts.at(0)).edges;
  for (std::size_t i = 1; i < charts.size(); ++i)
    out = intersect_sorted(out, charts_.at(charts[i]).edges);
  return out;
}

std::vector<int> CoveredSpace::overlap_faces(
    const std::vector<int>& charts) const {
  std::vector<int> out = charts_.at(charts.at(0)).faces;
  for (std::size_t i = 1; i < charts.size(); ++i)
    out = intersect_sorted(out, charts_.at(charts[i]).faces);
  return out;
}

CoveredSpace make_circle_two_arcs(int n) {
  CellComplex cx = make_cycle_graph(n);
  Chart u1{"A", {}, {}, {}}, u2{"B", {}, {}, {}};
  for (int v = 0; v <= n / 2; ++v) u1.vertices.push_back(v);
  for (int e = 0; e < n / 2; ++e) u1.edges.push_back(e);
  for (int v = n / 2; v < n; ++v) u2.vertices.push_back(v);
  u2.vertices.push_back(0);
  for (int e = n / 2; e < n; ++e) u2.edges.push_back(e);
  return CoveredSpace::combinatorial(std::move(cx), {u1, u2});
}

CoveredSpace make_interval_two_arcs(int n) {
  CellComplex cx = make_path_graph(n);
  int mid = n / 2;
  Chart u1{"A", {}, {}, {}}, u2{"B", {}, {}, {}};
  for (int v = 0; v <= mid + 1; ++v) u1.vertices.push_back(v);
  for (int e = 0; e <= mid; ++e) u1.edges.push_back(e);
  for (int v = mid; v < n; ++v) u2.vertices.push_back(v);
  for (int e = mid; e < n - 1; ++e) u2.edges.push_back(e);
  return CoveredSpace::combinatorial(std::move(cx), {u1, u2});
}

CoveredSpace make_torus_four_charts(int nx, int ny) {
  if (nx < 4 || ny < 4 || nx % 2 || ny % 2)
    throw Error("torus-4-charts needs even grid sizes >= 4");
  CellComplex cx = make_torus_grid(nx, ny);
  // chart (a,b) covers a (nx/2+1) x (ny/2+1) vertex patch
  auto cols = [&](int a) {
    std::vector<int> out;
    for (int d = 0; d <= nx / 2; ++d) out.push_back((a * nx / 2 + d) % nx);
    return out;
  };
  auto rows = [&](int b) {
    std::vector<int> out;
    for (int d = 0; d <= ny / 2; ++d) out.push_back((b * ny / 2 + d) % ny);
    return out;
  };
  auto vid = [&](int i, int j) { return (i % nx) * ny + (j % ny); };
  auto hedge = [&](int i, int j) { return 2 * vid(i, j); };
  auto vedge = [&](int i, int j) { return 2 * vid(i, j) + 1; };
  auto fid = [&](int i, int j) { return vid(i, j); };  // face index = vid

  std::vector<Chart> charts;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) {
      Chart c;
      c.name = "U" + std::to_string(a) + std::to_string(b);
      auto cs = cols(a);
      auto rs = rows(b);
      for (int i : cs)
        for (int j : rs) c.vertices.push_back(vid(i, j));
      for (std::size_t ci = 0; ci + 1 < cs.size(); ++ci)
        for (int j : rs) c.edges.push_back(hedge(cs[ci], j));
      for (int i : cs)
        for (std::size_t rj = 0; rj + 1 < rs.size(); ++rj)
          c.edges.push_back(vedge(i, rs[rj]));
      for (std::size_t ci = 0; ci + 1 < cs.size(); ++ci)
        for (std::size_t rj = 0; rj + 1 < rs.size(); ++rj)
          c.faces.push_back(fid(cs[ci], rs[rj]));
      charts.push_back(std::move(c));
    }
  return CoveredSpace::combinatorial(std::move(cx), std::move(charts));
}

CoveredSpace make_octahedron_two_charts() {
  CellComplex cx = make_octahedron();
  Chart north{"N", {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3}};
  Chart south{"S", {1, 2, 3, 4, 5}, {4, 5, 6, 7, 8, 9, 10, 11}, {4, 5, 6, 7}};
  return CoveredSpace::combinatorial(std::move(cx), {north, south});
}

CoveredSpace make_torus_full_overlap(int nx, int ny, int k) {
  CellComplex cx = make_torus_grid(nx, ny);
  std::vector<Chart> charts;
  for (int c = 0; c < k; ++c) {
    Chart chart;
    chart.name = "U" + std::to_string(c);
    for (int v = 0; v < cx.num_vertices(); ++v) chart.vertices.push_back(v);
    for (int e = 0; e < cx.num_edges(); ++e) chart.edges.push_back(e);
    for (int f = 0; f < cx.num_faces(); ++f) chart.faces.push_back(f);
    charts.push_back(std::move(chart));
  }
  return CoveredSpace::combinatorial(std::move(cx), std::move(charts));
}

CoveredSpace make_torus_four_ladders(int ny) {
  const int nx = 4;
  CellComplex cx = make_torus_grid(nx, ny);
  auto vid = [&](int i, int j) { return ((i % nx + nx) % nx) * ny + ((j % ny + ny) % ny); };
  auto hedge = [&](int i, int j) { return 2 * vid(i, j); };
  auto vedge = [&](int i, int j) { return 2 * vid(i, j) + 1; };
  std::vector<Chart> charts;
  for (int i = 0; i < nx; ++i) {
    Chart ch;
    ch.name = "L" + std::to_string(i);
    for (int j = 0; j < ny; ++j) {
      ch.vertices.push_back(vid(i, j));
      ch.vertices.push_back(vid(i + 1, j));
      ch.edges.push_back(hedge(i, j));
      ch.edges.push_back(vedge(i, j));
      ch.edges.push_back(vedge(i + 1, j));
      ch.faces.push_back(vid(i, j));
    }
    std::sort(ch.vertices.begin(), ch.vertices.end());
    ch.vertices.erase(std::unique(ch.vertices.begin(), ch.vertices.end()),
                      ch.vertices.end());
    std::sort(ch.edges.begin(), ch.edges.end());
    ch.edges.erase(std::unique(ch.edges.begin(), ch.edges.end()), ch.edges.end());
    charts.push_back(std::move(ch));
  }
  return CoveredSpace::combinatorial(std::move(cx), std::move(charts));
}

CoveredSpace make_three_torus_eight_charts(int n) {
  // vertex grid on T^3 with axis edges; no faces (nerve combinatorics only)
  auto vid = [&](int i, int j, int k) {
    auto w = [&](int x) { return (x % n + n) % n; };
    return (w(i) * n + w(j)) * n + w(k);
  };
  std::vector<std::string> verts(n * n * n);
  std::vector<CellComplex::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        verts[vid(i, j, k)] = "v" + std::to_string(i) + "_" + std::to_string(j) +
                              "_" + std::to_string(k);
        edges.push_back({vid(i, j, k), vid(i + 1, j, k)});
        edges.push_back({vid(i, j, k), vid(i, j + 1, k)});
        edges.push_back({vid(i, j, k), vid(i, j, k + 1)});
      }
  CellComplex cx(std::move(verts), std::move(edges), {});

  auto patch = [&](int a) {
    std::vector<int> out;
    for (int d = 0; d <= n / 2; ++d) out.push_back((a * n / 2 + d) % n);
    return out;
  };
  std::vector<Chart> charts;
  for (int c = 0; c < 8; ++c) {
    Chart ch;
    ch.name = "U" + std::to_string(c & 1) + std::to_string((c >> 1) & 1) +
              std::to_string((c >> 2) & 1);
    auto pi = patch(c & 1), pj = patch((c >> 1) & 1), pk = patch((c >> 2) & 1);
    std::set<int> vs;
    for (int i : pi)
      for (int j : pj)
        for (int k : pk) vs.insert(vid(i, j, k));
    ch.vertices.assign(vs.begin(), vs.end());
    for (int e = 0; e < cx.num_edges(); ++e)
      if (vs.count(cx.edge(e).tail) && vs.count(cx.edge(e).head))
        ch.edges.push_back(e);
    charts.push_back(std::move(ch));
  }
  return CoveredSpace::combinatorial(std::move(cx), std::move(charts));
}

}  // namespace ghol
