#include "ghol/local_subgroupoid.hpp"

#include "ghol/transport.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace ghol {

int TransportFunctional::path_arrow(const CellComplex& cx, int start_vertex,
                                    const std::vector<Step>& steps) const {
  int arrow = g->identity(g->object_index(cx.vertex_name(start_vertex)));
  for (const Step& s : steps) arrow = g->compose(arrow, arrow_of_step(s));
  return arrow;
}

Subgroupoid generated_on(std::shared_ptr<const FiniteGroupoid> parent,
                         const std::vector<int>& objects,
                         const std::vector<int>& generators) {
  const FiniteGroupoid& g = *parent;
  std::set<int> objs(objects.begin(), objects.end());
  std::set<int> arrows;
  for (int x : objs) arrows.insert(g.identity(x));
  for (int a : generators) {
    if (!objs.count(g.arrow(a).src) || !objs.count(g.arrow(a).tgt))
      throw Error("generator leaves the object set");
    arrows.insert(a);
    arrows.insert(g.inverse(a));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(arrows.begin(), arrows.end());
    for (int a : cur)
      for (int b : cur)
        if (g.composable(a, b) && arrows.insert(g.compose(a, b)).second)
          grew = true;
  }
  Subgroupoid s;
  s.parent = std::move(parent);
  s.objects.assign(objs.begin(), objs.end());
  s.arrows.assign(arrows.begin(), arrows.end());
  return s;
}

Subgroupoid c_upsilon(const CoveredSpace& space, int chart,
                      const TransportFunctional& transport) {
  const CellComplex& cx = space.complex();
  const FiniteGroupoid& g = *transport.g;
  const Chart& ch = space.chart(chart);

  std::vector<int> objects;
  for (int v : ch.vertices) objects.push_back(g.object_index(cx.vertex_name(v)));

  std::vector<int> generators;
  for (int e : ch.edges) {
    int fwd = transport.arrow_of_step({e, chart});
    int bwd = transport.arrow_of_step({~e, chart});
    const Arrow& fa = g.arrow(fwd);
    if (fa.src != g.object_index(cx.vertex_name(cx.edge(e).tail)) ||
        fa.tgt != g.object_index(cx.vertex_name(cx.edge(e).head)))
      throw InconsistentTransport("step arrow endpoints disagree on edge " +
                                  std::to_string(e));
    if (bwd != g.inverse(fwd))
      throw InconsistentTransport("reversal law fails on edge " +
                                  std::to_string(e));
    generators.push_back(fwd);
  }
  return generated_on(transport.g, objects, generators);
}

GeodesicStructure bfs_lex_geodesics(const CoveredSpace& space) {
  const CellComplex& cx = space.complex();
  GeodesicStructure geod;
  geod.tables.resize(space.num_charts());
  for (int c = 0; c < space.num_charts(); ++c) {
    const Chart& chart = space.chart(c);
    // candidate steps inside the chart
    std::map<int, std::vector<Step>> steps_at;
    for (int e : chart.edges) {
      steps_at[cx.edge(e).tail].push_back({e, c});
      steps_at[cx.edge(e).head].push_back({~e, c});
    }
    for (int start : chart.vertices) {
      // Dijkstra on (length, vertex-name sequence)
      using Key = std::pair<int, std::vector<std::string>>;
      std::map<int, std::pair<Key, std::vector<Step>>> best;
      auto name_seq = [&](const std::vector<Step>& path) {
        std::vector<std::string> names = {cx.vertex_name(start)};
        for (const Step& s : path) names.push_back(cx.vertex_name(cx.side_head(s.side)));
        return names;
      };
      std::set<std::pair<Key, int>> queue;
      best[start] = {{0, {cx.vertex_name(start)}}, {}};
      queue.insert({best[start].first, start});
      while (!queue.empty()) {
        auto [key, v] = *queue.begin();
        queue.erase(queue.begin());
        if (best[v].first < key) continue;
        for (const Step& s : steps_at.count(v) ? steps_at[v] : std::vector<Step>{}) {
          int w = cx.side_head(s.side);
          std::vector<Step> path = best[v].second;
          path.push_back(s);
          Key cand = {key.first + 1, name_seq(path)};
          auto it = best.find(w);
          if (it == best.end() || cand < it->second.first) {
            if (it != best.end()) queue.erase({it->second.first, w});
            best[w] = {cand, path};
            queue.insert({cand, w});
          }
        }
      }
      for (const auto& [target, entry] : best)
        geod.tables[c][{start, target}] = entry.second;
    }
  }
  return geod;
}

namespace {

// enumerate in-chart step paths from `start` up to the length budget
void enumerate_paths(const CellComplex& cx, const Chart& chart, int chart_index,
                     int start, int budget,
                     const std::function<void(int, const std::vector<Step>&)>& visit) {
  std::map<int, std::vector<Step>> steps_at;
  for (int e : chart.edges) {
    steps_at[cx.edge(e).tail].push_back({e, chart_index});
    steps_at[cx.edge(e).head].push_back({~e, chart_index});
  }
  std::vector<Step> path;
  std::function<void(int)> dfs = [&](int v) {
    visit(v, path);
    if (static_cast<int>(path.size()) >= budget) return;
    auto it = steps_at.find(v);
    if (it == steps_at.end()) return;
    for (const Step& s : it->second) {
      path.push_back(s);
      dfs(cx.side_head(s.side));
      path.pop_back();
    }
  };
  dfs(start);
}

}  // namespace

Germ LocalSubgroupoid::section(int groupoid_object) const {
  for (const AtlasPiece& piece : atlas) {
    if (std::find(piece.chart_objects.begin(), piece.chart_objects.end(),
                  groupoid_object) == piece.chart_objects.end())
      continue;
    int open = site.find_open(piece.chart_objects);
    if (open < 0) throw Error("atlas chart is not an open of the site");
    return germ_at(site, groupoid_object, open, piece.piece);
  }
  throw PointOutside("object not covered by the atlas");
}

std::pair<LocalSubgroupoid, BuildReport> build_local_subgroupoid(
    const CoveredSpace& space, const GeodesicStructure& geod,
    const TransportFunctional& transport, int flatness_budget, bool strict) {
  const CellComplex& cx = space.complex();
  const FiniteGroupoid& g = *transport.g;
  BuildReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  // (i) uniqueness: every ordered pair in a chart has exactly one path
  for (int c = 0; c < space.num_charts(); ++c) {
    const Chart& chart = space.chart(c);
    for (int x : chart.vertices)
      for (int y : chart.vertices) {
        auto it = geod.tables[c].find({x, y});
        if (it == geod.tables[c].end())
          fail(rep.geodesics_unique,
               "no geodesic " + cx.vertex_name(x) + ">" + cx.vertex_name(y) +
                   " in chart " + space.chart_name(c));
      }
  }

  // (ii) overlap coherence: geod_i = geod_j on pairwise overlaps
  for (int i = 0; i < space.num_charts() && rep.geodesics_unique; ++i)
    for (int j = i + 1; j < space.num_charts(); ++j) {
      std::vector<int> overlap = space.overlap_vertices({i, j});
      for (int x : overlap)
        for (int y : overlap) {
          const auto& pi = geod.tables[i].at({x, y});
          const auto& pj = geod.tables[j].at({x, y});
          auto word = [](const std::vector<Step>& steps) {
            std::vector<int> w;
            for (const Step& s : steps) w.push_back(s.side);
            return w;
          };
          if (word(pi) != word(pj))
            fail(rep.overlaps_coherent,
                 "geodesics disagree on overlap (" + space.chart_name(i) +
                     "," + space.chart_name(j) + ") at " + cx.vertex_name(x) +
                     ">" + cx.vertex_name(y));
        }
    }
  if (strict && !rep.overlaps_coherent)
    throw OverlapIncoherence(rep.first_failure);

  // (iii) flatness: any in-chart path transports like its geodesic
  for (int c = 0; c < space.num_charts() && rep.geodesics_unique; ++c) {
    const Chart& chart = space.chart(c);
    for (int start : chart.vertices) {
      enumerate_paths(cx, chart, c, start, flatness_budget,
                      [&](int end, const std::vector<Step>& path) {
                        ++rep.flatness_paths_checked;
                        int got = transport.path_arrow(cx, start, path);
                        int want = transport.path_arrow(
                            cx, start, geod.tables[c].at({start, end}));
                        if (got != want)
                          fail(rep.flat, "transport is not flat in chart " +
                                             space.chart_name(c) + " between " +
                                             cx.vertex_name(start) + " and " +
                                             cx.vertex_name(end));
                      });
    }
  }
  if (strict && !rep.flat) throw FlatnessViolation(rep.first_failure);

  // assemble atlas pieces and the site on groupoid objects
  std::vector<std::vector<int>> cover_sets;
  std::vector<AtlasPiece> atlas;
  for (int c = 0; c < space.num_charts(); ++c) {
    AtlasPiece piece;
    piece.chart = c;
    for (int v : space.chart(c).vertices)
      piece.chart_objects.push_back(g.object_index(cx.vertex_name(v)));
    std::sort(piece.chart_objects.begin(), piece.chart_objects.end());
    piece.piece = c_upsilon(space, c, transport);
    cover_sets.push_back(piece.chart_objects);
    atlas.push_back(std::move(piece));
  }
  FiniteSite site = FiniteSite::from_cover(g.num_objects(), cover_sets);

  // path-locality over the finite topology: for every open U, pair (i,j),
  // and x in U_i & U_j & U there is a witness open W with
  // C(G|U_i)|W = C(G|U_j & U)|W
  std::map<std::pair<int, std::vector<int>>, Subgroupoid> memo;
  auto c_upsilon_on = [&](int chart, const std::vector<int>& verts) {
    auto key = std::make_pair(chart, verts);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::set<int> inside(verts.begin(), verts.end());
    std::vector<int> objects;
    for (int v : verts) objects.push_back(g.object_index(cx.vertex_name(v)));
    std::vector<int> generators;
    for (int e : space.chart(chart).edges)
      if (inside.count(cx.edge(e).tail) && inside.count(cx.edge(e).head))
        generators.push_back(transport.arrow_of_step({e, chart}));
    Subgroupoid s = generated_on(transport.g, objects, generators);
    memo.emplace(key, s);
    return s;
  };
  auto vertices_of_objects = [&](const std::vector<int>& objs) {
    // groupoid objects back to complex vertices (names align)
    std::vector<int> verts;
    for (int o : objs) verts.push_back(cx.vertex_index(g.object(o)));
    std::sort(verts.begin(), verts.end());
    return verts;
  };

  for (int u = 0; u < site.num_opens() && rep.path_local; ++u) {
    std::vector<int> u_objs = site.open_vertices(u);
    for (int i = 0; i < space.num_charts(); ++i)
      for (int j = 0; j < space.num_charts(); ++j) {
        if (i == j) continue;
        for (int x : u_objs) {
          if (!std::binary_search(atlas[i].chart_objects.begin(),
                                  atlas[i].chart_objects.end(), x) ||
              !std::binary_search(atlas[j].chart_objects.begin(),
                                  atlas[j].chart_objects.end(), x))
            continue;
          ++rep.path_local_checks;
          // witness scan
          bool witnessed = false;
          for (int w = 0; w < site.num_opens() && !witnessed; ++w) {
            const FiniteSite::Mask& wm = site.open(w);
            if (!site.mask_contains(wm, x)) continue;
            if (!site.mask_subset(wm, site.make_mask(atlas[i].chart_objects)))
              continue;
            if (!site.mask_subset(wm, site.make_mask(atlas[j].chart_objects)))
              continue;
            if (!site.mask_subset(wm, site.open(u))) continue;
            std::vector<int> w_objs = site.open_vertices(w);
            // restriction of the piece on U_i vs the piece on U_j & U
            Subgroupoid lhs = atlas[i].piece.restrict_to(w_objs);
            std::vector<int> ju_objs;
            std::set_intersection(atlas[j].chart_objects.begin(),
                                  atlas[j].chart_objects.end(), u_objs.begin(),
                                  u_objs.end(), std::back_inserter(ju_objs));
            Subgroupoid rhs =
                c_upsilon_on(j, vertices_of_objects(ju_objs)).restrict_to(w_objs);
            if (lhs == rhs) witnessed = true;
          }
          if (!witnessed)
            fail(rep.path_local,
                 "no path-locality witness at " + g.object(x) + " for (" +
                     space.chart_name(i) + "," + space.chart_name(j) +
                     ") inside open " + std::to_string(u));
        }
        if (!rep.path_local) break;
      }
  }

  LocalSubgroupoid out{transport.g, std::move(site), std::move(atlas),
                       default_overlap_opens(space, g)};
  return {std::move(out), rep};
}

std::map<std::pair<int, int>, std::vector<std::vector<int>>>
default_overlap_opens(const CoveredSpace& space, const FiniteGroupoid& g) {
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> opens;
  const CellComplex& cx = space.complex();
  for (int i = 0; i < space.num_charts(); ++i)
    for (int j = i + 1; j < space.num_charts(); ++j) {
      std::vector<int> overlap = space.overlap_vertices({i, j});
      if (overlap.empty()) continue;
      // connectivity through overlap edges only (edges in both charts)
      std::map<int, int> root;
      for (int v : overlap) root[v] = v;
      std::function<int(int)> find = [&](int v) {
        return root[v] == v ? v : root[v] = find(root[v]);
      };
      for (int e : space.overlap_edges({i, j}))
        root[find(cx.edge(e).tail)] = find(cx.edge(e).head);
      std::map<int, std::vector<int>> comps;
      for (int v : overlap)
        comps[find(v)].push_back(g.object_index(cx.vertex_name(v)));
      std::vector<std::vector<int>> out;
      for (auto& [rep, objs] : comps) {
        (void)rep;
        std::sort(objs.begin(), objs.end());
        out.push_back(std::move(objs));
      }
      opens[{i, j}] = std::move(out);
    }
  return opens;
}

std::shared_ptr<const FiniteGroupoid> gauge_model(const CoveredSpace& space,
                                                  int fiber_order) {
  const CellComplex& cx = space.complex();
  std::vector<std::string> objects;
  for (int v = 0; v < cx.num_vertices(); ++v)
    objects.push_back(cx.vertex_name(v));
  std::vector<Arrow> arrows;
  const int n = cx.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < fiber_order; ++k)
        arrows.push_back({"", i, j, Phase::turns(Rat(k, fiber_order))});
  return share(FiniteGroupoid::from_arrows(std::move(objects),
                                           std::move(arrows), true));
}

TransportFunctional bundle_step_transport(
    std::shared_ptr<const FiniteGroupoid> model, const LineBundleData& bundle) {
  TransportFunctional t;
  t.g = model;
  const CoveredSpace* space = bundle.space.get();
  LineBundleData data = bundle;
  t.arrow_of_step = [model, data, space](const Step& s) {
    const CellComplex& cx = space->complex();
    int tail = cx.side_tail(s.side), head = cx.side_head(s.side);
    Phase phase = transport_steps_raw(data, tail, {s});
    return model->arrow_index(Arrow::canonical_id(
        cx.vertex_name(tail), cx.vertex_name(head), phase));
  };
  return t;
}

TransportFunctional pair_step_transport(
    std::shared_ptr<const FiniteGroupoid> pair_model,
    const CoveredSpace& space) {
  TransportFunctional t;
  t.g = pair_model;
  const CoveredSpace* sp = &space;
  auto model = pair_model;
  t.arrow_of_step = [model, sp](const Step& s) {
    const CellComplex& cx = sp->complex();
    return model->arrow_index(
        Arrow::canonical_id(cx.vertex_name(cx.side_tail(s.side)),
                            cx.vertex_name(cx.side_head(s.side)), {}));
  };
  return t;
}

}  // namespace ghol
