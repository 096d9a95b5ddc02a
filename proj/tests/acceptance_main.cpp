// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "ghol/crossed_module.hpp"
#include "ghol/holonomy_groupoid.hpp"
#include "ghol/loop_space.hpp"
#include "ghol/report.hpp"
#include "ghol/surface_holonomy.hpp"
#include "ghol/transport.hpp"

using namespace ghol;

namespace {

int failures = 0;

struct Criterion {
  int number;
  const char* name;
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    } else if (!ok) {
      pass = false;
    }
  }
};

template <typename Fn>
void run_criterion(int number, const char* name, Fn&& body) {
  Criterion c{number, name, true, {}};
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& err) {
    c.require(false, std::string("exception: ") + err.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL",
              number, name, secs, c.detail.empty() ? "" : " -- ",
              c.detail.c_str());
  if (!c.pass) ++failures;
}

ThinPath latitude_loop(std::shared_ptr<const CoveredSpace> space, double theta) {
  return ThinPath::smooth(
      space, {{0, Curve::latitude(theta, 0, kTwoPi), Reparam{}}});
}

std::shared_ptr<const CoveredSpace> full22() {
  return std::make_shared<const CoveredSpace>(make_torus_full_overlap(2, 2));
}

TwoLoop fundamental(std::shared_ptr<const CoveredSpace> space, int copies = 1,
                    int orient = 1) {
  std::vector<int> faces;
  for (int f = 0; f < space->complex().num_faces(); ++f) faces.push_back(f);
  return TwoLoop::closed(space, std::vector<Sheet>(copies, Sheet{faces, orient}));
}

DeligneCochain random_cochain(const CoveredSpace& space, std::mt19937& rng) {
  DeligneCochain c;
  std::uniform_int_distribution<int> num(-8, 8);
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() != 2) continue;
    auto& table = c.h[{entry.charts[0], entry.charts[1]}];
    for (int v : space.overlap_vertices(entry.charts))
      table[v] = Rat(num(rng), 12);
  }
  for (int chart = 0; chart < space.num_charts(); ++chart) {
    DiscreteForm chi;
    chi.degree = 1;
    for (int e : space.chart(chart).edges) chi.values[e] = Rat(num(rng), 24);
    c.chi[chart] = std::move(chi);
  }
  return c;
}

// transport-law + piecewise-identity sweep over one scenario family
void transport_law_sweep(Criterion& c, const LineBundleData& bundle,
                         const std::vector<ThinPath>& gens, unsigned seed,
                         const char* label) {
  ThinPathDouble tpd =
      thin_path_double_groupoid(bundle, gens, PathClassMode::TransportClasses);
  const FiniteGroupoid& v = tpd.dg.vert();
  std::vector<std::pair<int, int>> composable;
  for (int a = 0; a < v.num_arrows(); ++a)
    for (int b = 0; b < v.num_arrows(); ++b)
      if (v.composable(a, b)) composable.push_back({a, b});
  c.require(!composable.empty(), std::string(label) + ": no composable pairs");
  if (composable.empty()) return;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, composable.size() - 1);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    auto [a, b] = composable[pick(rng)];
    int ab = v.compose(a, b);
    // transport law instance
    Square row1 = tpd.dg.compose2(tpd.cp.ups(a), tpd.dg.eps1(tpd.cp.hol_of(b)));
    Square row2 = tpd.dg.compose2(tpd.dg.eps2(b), tpd.cp.ups(b));
    Square rhs = tpd.dg.compose1(row1, row2);
    if (!(tpd.cp.ups(ab).key() == rhs.key())) {
      c.require(false, std::string(label) + ": transport law fails");
      return;
    }
    // piecewise identity on representatives with equal segment counts
    const ThinPath& pa = tpd.representatives[a];
    const ThinPath& pb = tpd.representatives[b];
    bool equal_len =
        pa.kind() == ThinPath::Kind::Combinatorial
            ? pa.steps().size() == pb.steps().size() && !pa.steps().empty()
            : pa.segments().size() == pb.segments().size();
    if (equal_len && pa.target_label() == pb.source_label()) {
      ThinPath both = concat(pa, pb);
      bool raw_len_kept =
          pa.kind() != ThinPath::Kind::Combinatorial ||
          both.steps().size() == pa.steps().size() + pb.steps().size();
      if (raw_len_kept) {
        for (double t : {0.25, 0.5, 0.75}) {
          Phase lhs = partial_transport(bundle, both, t);
          Phase rhs_phase =
              t <= 0.5 ? partial_transport(bundle, pa, 2 * t)
                       : partial_transport(bundle, pb, 2 * t - 1) +
                             partial_transport(bundle, pa, 1.0);
          if (!lhs.approx_equal(rhs_phase, 1e-9)) {
            c.require(false, std::string(label) + ": piecewise identity fails");
            return;
          }
          ++checked;
        }
      }
    }
  }
  c.require(checked > 0, std::string(label) + ": no piecewise checks ran");

  // fault injection: corrupting one transport square is located
  ConnectionPair bad = tpd.cp;
  int victim = bad.upsilon.begin()->first;
  bad.upsilon[victim].payload =
      SquarePayload::from_phase(Phase::turns(Rat(1, 9)));
  TransportLawReport rep = check_transport_law(bad, tpd.dg);
  c.require(!rep.pass && !rep.first_failure.empty(),
            std::string(label) + ": fault injection not located");
}

}  // namespace

int main() {
  run_criterion(1, "monopole bundle: validation, equator holonomy, flux",
                [](Criterion& c) {
    for (int n : {1, 2, 3}) {
      auto start = std::chrono::steady_clock::now();
      LineBundleData bundle = LineBundleData::monopole_sphere(n);
      c.require(validate_bundle(bundle, 1e-9).pass,
                "monopole validation fails at n=" + std::to_string(n));
      Phase eq = holonomy(bundle, latitude_loop(bundle.space, kTwoPi / 4));
      // oracle: the analytic value (n/2)(1 - cos(pi/2)) turns = n/2 mod 1
      c.require(eq.approx_equal(Phase::turns(Rat(n, 2)), 1e-9),
                "equator holonomy off at n=" + std::to_string(n));
      // cross-check against the exact combinatorial monopole
      LineBundleData octa = LineBundleData::monopole_octahedron(n);
      std::vector<Step> steps;
      for (int k = 0; k < 4; ++k) steps.push_back({4 + k, 0});
      Phase exact = holonomy(octa, ThinPath::combinatorial(octa.space, 1, steps));
      c.require(exact.exact_turns() == Rat(n, 2).mod1(),
                "exact equator value off at n=" + std::to_string(n));
      double flux = total_curvature_radians(bundle);
      c.require(std::fabs(flux - kTwoPi * n) < 1e-9,
                "total flux off at n=" + std::to_string(n));
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      c.require(secs < 5.0, "runtime budget exceeded at n=" + std::to_string(n));
    }
  });

  run_criterion(2, "transport-law suite on 1000 pairs per scenario",
                [](Criterion& c) {
    // trivial bundle on the interval
    auto interval = std::make_shared<const CoveredSpace>(make_interval_two_arcs(9));
    LineBundleData trivial = LineBundleData::trivial(interval);
    std::vector<ThinPath> tgens;
    tgens.push_back(ThinPath::combinatorial(interval, 0, {{0, 0}, {1, 0}}));
    tgens.push_back(ThinPath::combinatorial(interval, 2, {{2, 0}, {3, 0}}));
    tgens.push_back(ThinPath::combinatorial(interval, 4, {{4, 0}, {5, 1}}));
    transport_law_sweep(c, trivial, tgens, 101, "trivial");

    // analytic monopole latitude family
    LineBundleData mono = LineBundleData::monopole_sphere(1);
    std::vector<ThinPath> mgens;
    for (double theta : {kTwoPi / 6, kTwoPi / 4, kTwoPi / 3})
      mgens.push_back(latitude_loop(mono.space, theta));
    transport_law_sweep(c, mono, mgens, 102, "monopole");

    // combinatorial flat torus
    auto torus = std::make_shared<const CoveredSpace>(make_torus_four_charts(4, 4));
    LineBundleData flat = LineBundleData::flat_torus(torus, Rat(1, 3), Rat(2, 5));
    auto vid = [](int i, int j) { return i * 4 + j; };
    auto hedge = [&](int i, int j) { return 2 * vid(i, j); };
    auto vedge = [&](int i, int j) { return 2 * vid(i, j) + 1; };
    std::vector<ThinPath> fgens;
    fgens.push_back(ThinPath::combinatorial(
        torus, 0, {{hedge(0, 0), 0}, {hedge(1, 0), 0}, {hedge(2, 0), 1},
                   {hedge(3, 0), 1}}));
    fgens.push_back(ThinPath::combinatorial(
        torus, 0, {{vedge(0, 0), 0}, {vedge(0, 1), 0}, {vedge(0, 2), 2},
                   {vedge(0, 3), 2}}));
    transport_law_sweep(c, flat, fgens, 103, "torus");
  });

  run_criterion(3, "thin invariance under backtracks and reparametrizations",
                [](Criterion& c) {
    std::mt19937 rng(301);
    // combinatorial: octahedron monopole equator, exact
    LineBundleData octa = LineBundleData::monopole_octahedron(2);
    std::vector<Step> base_steps;
    for (int k = 0; k < 4; ++k) base_steps.push_back({4 + k, 0});
    ThinPath loop = ThinPath::combinatorial(octa.space, 1, base_steps);
    Phase base = holonomy(octa, loop);
    const CellComplex& cx = octa.space->complex();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Step> steps(loop.steps().begin(), loop.steps().end());
      std::uniform_int_distribution<std::size_t> at(0, steps.size());
      std::size_t pos = at(rng);
      ThinPath prefix = ThinPath::combinatorial(
          octa.space, 1, std::vector<Step>(steps.begin(), steps.begin() + pos));
      int vertex = prefix.end_vertex();
      auto incident = cx.edges_at(vertex);
      std::uniform_int_distribution<std::size_t> pick(0, incident.size() - 1);
      int e = incident[pick(rng)];
      int side = cx.edge(e).tail == vertex ? e : ~e;
      int chart = octa.space->chart(0).has_edge(e) ? 0 : 1;
      steps.insert(steps.begin() + pos, {~side, chart});
      steps.insert(steps.begin() + pos, {side, chart});
      Phase padded = transport_steps_raw(octa, 1, steps);
      c.require(padded.exact_turns() == base.exact_turns(),
                "backtrack insertion moved an exact holonomy");
    }
    // smooth: monopole latitude, quadrature
    LineBundleData mono = LineBundleData::monopole_sphere(1);
    ThinPath lat = latitude_loop(mono.space, kTwoPi / 4);
    Phase smooth_base = holonomy(mono, lat);
    std::uniform_real_distribution<double> cut(0.1, 0.9);
    for (int trial = 0; trial < 50; ++trial) {
      double t = cut(rng);
      SmoothSegment fwd{0, Curve::latitude(kTwoPi / 4, 0, t), Reparam{}};
      SmoothSegment back{0, Curve::latitude(kTwoPi / 4, t, 0), Reparam{}};
      ThinPath padded = ThinPath::smooth(
          mono.space, {fwd, back, lat.segments().front()});
      c.require(holonomy(mono, padded).approx_equal(smooth_base, 1e-9),
                "smooth backtrack insertion exceeded tolerance");
    }
    int reparams = 0;
    for (const char* name : {"identity", "square", "cubic", "smoothstep"})
      for (double theta : {kTwoPi / 6, kTwoPi / 4, kTwoPi / 3, 0.7, 1.9}) {
        ThinPath p = latitude_loop(mono.space, theta);
        Phase want = holonomy(mono, p);
        Phase got = holonomy(mono, reparametrize(p, Reparam::named(name)));
        c.require(got.approx_equal(want, 1e-9),
                  "reparametrization moved a holonomy");
        ++reparams;
      }
    c.require(reparams == 20, "expected 20 reparametrization checks");
    // surface holonomy: unchanged under assignment resampling
    auto space = full22();
    GerbeData flat = GerbeData::flat_torus(space, Rat(1, 3));
    GerbeData moved = apply_coboundary(flat, random_cochain(*space, rng));
    TwoLoop cycle = fundamental(space);
    std::vector<int> faces = {0, 1, 2, 3};
    auto assignments = enumerate_assignments(*space, faces);
    std::uniform_int_distribution<std::size_t> pick_asg(0, assignments.size() - 1);
    Phase sbase = surface_holonomy(moved, cycle);
    for (int trial = 0; trial < 50; ++trial)
      c.require(surface_holonomy(moved, cycle, assignments[pick_asg(rng)])
                        .exact_turns() == sbase.exact_turns(),
                "surface holonomy moved under reassignment");
  });

  run_criterion(4, "gerbe assignment independence, exhaustive per flux",
                [](Criterion& c) {
    auto space = full22();
    std::mt19937 rng(401);
    std::vector<int> faces = {0, 1, 2, 3};
    auto assignments = enumerate_assignments(*space, faces);
    c.require(assignments.size() == 65536, "expected 65536 assignments");
    for (Rat flux : {Rat(1, 3), Rat(1, 2), Rat(2, 5)}) {
      GerbeData flat = GerbeData::flat_torus(space, flux);
      c.require(validate_gerbe(flat).pass, "flat gerbe invalid");
      Phase want = Phase::turns(flux);
      long long agreed = 0;
      for (const Phase& hol : sweep_assignments(flat, faces, assignments))
        if (hol.exact_turns() == want.exact_turns()) ++agreed;
      c.require(agreed == 65536, "flat sweep disagreed at flux " + flux.str());
      // a Deligne-equivalent copy with nontrivial theta and A terms
      GerbeData movedg = apply_coboundary(flat, random_cochain(*space, rng));
      c.require(validate_gerbe(movedg).pass, "moved gerbe invalid");
      long long agreed2 = 0;
      for (const Phase& hol : sweep_assignments(movedg, faces, assignments))
        if (hol.exact_turns() == want.exact_turns()) ++agreed2;
      c.require(agreed2 == 65536, "moved sweep disagreed at flux " + flux.str());
    }
  });

  run_criterion(5, "2-holonomy homomorphism on >= 100 pairs", [](Criterion& c) {
    auto space = full22();
    GerbeData gerbe = GerbeData::flat_torus(space, Rat(2, 5));
    std::vector<std::pair<std::string, TwoLoop>> family;
    for (int k = 1; k <= 3; ++k) {
      family.push_back({"s^" + std::to_string(k), fundamental(space, k, 1)});
      family.push_back({"s^-" + std::to_string(k), fundamental(space, k, -1)});
    }
    // mixed words: s * s^-1 * s etc. via sheet concatenation
    TwoLoop mixed = concat(fundamental(space), fundamental(space, 1, -1));
    family.push_back({"s*sbar", mixed});
    family.push_back({"s*sbar*s", concat(mixed, fundamental(space))});
    family.push_back({"trivial", concat(fundamental(space, 2, -1),
                                        fundamental(space, 2, 1))});
    family.push_back({"s^2*sbar", concat(fundamental(space, 2),
                                         fundamental(space, 1, -1))});
    TwoHolonomyReport rep = two_holonomy(gerbe, family);
    c.require(rep.pairs_checked >= 100,
              "only " + std::to_string(rep.pairs_checked) + " pairs");
    c.require(rep.homomorphism_ok, rep.first_failure);
    // spot value: k-fold covers scale the flux
    c.require(rep.table[2].value.exact_turns() == (Rat(2, 5) * Rat(2)).mod1(),
              "2-fold cover value wrong");
  });

  run_criterion(6, "Deligne gauge invariance, 100 coboundaries per scenario",
                [](Criterion& c) {
    std::mt19937 rng(601);
    auto space = full22();
    for (Rat flux : {Rat(0), Rat(1, 3), Rat(2, 5)}) {
      GerbeData gerbe = GerbeData::flat_torus(space, flux);
      TwoLoop cycle = fundamental(space);
      TwoLoop doubled = fundamental(space, 2);
      Phase h1 = surface_holonomy(gerbe, cycle);
      Phase h2 = surface_holonomy(gerbe, doubled);
      for (int trial = 0; trial < 100; ++trial) {
        GerbeData moved = apply_coboundary(gerbe, random_cochain(*space, rng));
        c.require(validate_gerbe(moved).pass, "coboundary broke validity");
        c.require(surface_holonomy(moved, cycle).exact_turns() ==
                      h1.exact_turns(),
                  "holonomy moved under a coboundary");
        c.require(surface_holonomy(moved, doubled).exact_turns() ==
                      h2.exact_turns(),
                  "doubled holonomy moved under a coboundary");
      }
    }
  });

  run_criterion(7, "theorem 2.2 round trip on small crossed modules",
                [](Criterion& c) {
    auto trivial_action = [](int p_order, int m_order) {
      std::vector<int> id(m_order);
      for (int i = 0; i < m_order; ++i) id[i] = i;
      return std::vector<std::vector<int>>(p_order, id);
    };
    std::vector<std::shared_ptr<const CrossedModule>> instances;
    {
      GroupTable c2 = GroupTable::cyclic(2);
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(c2, c2, {0, 1}, trivial_action(2, 2))));
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(c2, c2, {0, 0}, trivial_action(2, 2))));
    }
    {
      GroupTable c4 = GroupTable::cyclic(4);
      GroupTable c2 = GroupTable::cyclic(2);
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(c4, c2, {0, 1, 0, 1},
                                    trivial_action(2, 4))));
      GroupTable v4 = GroupTable::klein4();
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(v4, c2, {0, 1, 1, 0},
                                    trivial_action(2, 4))));
    }
    {
      GroupTable s3 = GroupTable::dihedral(3);
      GroupTable c3 = GroupTable::cyclic(3);
      std::vector<std::vector<int>> conj;
      for (int g = 0; g < 6; ++g) {
        std::vector<int> perm(3);
        for (int m = 0; m < 3; ++m) perm[m] = s3.mul(s3.mul(s3.inv(g), m), g);
        conj.push_back(perm);
      }
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(c3, s3, {0, 1, 2}, conj)));
    }
    {
      GroupTable one = GroupTable::trivial();
      GroupTable c5 = GroupTable::cyclic(5);
      instances.push_back(std::make_shared<const CrossedModule>(
          CrossedModule::over_group(one, c5, {0}, trivial_action(5, 1))));
    }
    c.require(instances.size() >= 5, "need at least five instances");
    for (std::size_t i = 0; i < instances.size(); ++i) {
      auto [dg, cp] = double_from_crossed_module(instances[i]);
      auto laws = dg.check_laws();
      c.require(laws.pass, "double groupoid laws fail on instance " +
                               std::to_string(i));
      c.require(laws.checked_interchange > 0, "no interchange checks ran");
      c.require(check_transport_law(cp, dg).pass,
                "special connection fails the transport law");
      CrossedModule back = crossed_module_from_double(dg, cp);
      auto iso = find_crossed_module_iso(*instances[i], back);
      c.require(iso.has_value(),
                "no isomorphism on instance " + std::to_string(i));
      if (iso)
        c.require(verify_crossed_module_iso(*instances[i], back, *iso),
                  "exhibited map is not an isomorphism");
    }
  });

  run_criterion(8, "globalisation holonomy: circle vs interval",
                [](Criterion& c) {
    // circle: free rank 1 upstairs, trivial vertex group downstairs
    CoveredSpace circle = make_circle_two_arcs(12);
    const CellComplex& ccx = circle.complex();
    std::vector<std::string> names;
    for (int v = 0; v < ccx.num_vertices(); ++v)
      names.push_back(ccx.vertex_name(v));
    auto g = share(FiniteGroupoid::pair_groupoid(names));
    std::vector<Subgroupoid> pieces;
    for (int ch = 0; ch < circle.num_charts(); ++ch) {
      std::vector<int> objs;
      for (int v : circle.chart(ch).vertices)
        objs.push_back(g->object_index(ccx.vertex_name(v)));
      pieces.push_back(full_subgroupoid(g, objs));
    }
    auto opens = default_overlap_opens(circle, *g);
    // spanning-tree oracle on the incidence graph
    int nodes = circle.num_charts(), edges = 0;
    for (const auto& [pair, comps] : opens) {
      (void)pair;
      nodes += static_cast<int>(comps.size());
      edges += 2 * static_cast<int>(comps.size());
    }
    int oracle_rank = edges - nodes + 1;
    c.require(oracle_rank == 1, "incidence oracle expected rank 1");
    auto result = globalise(g, pieces, opens);
    auto [loops, table] = result.glob.vertex_group(g->object_index("v0"));
    c.require(loops.size() == 1, "glob vertex group not trivial");
    Presentation pres = result.hol->vertex_presentation(g->object_index("v0"));
    c.require(pres.is_free() && pres.rank() == oracle_rank,
              "holonomy vertex group is not free of rank 1");
    auto morphism = result.hol->check_covering_morphism(12, 1000, 808);
    c.require(morphism.ok && morphism.pairs == 1000,
              "covering morphism failed on random word pairs");

    // interval: bijective resolution
    CoveredSpace interval = make_interval_two_arcs(9);
    const CellComplex& icx = interval.complex();
    names.clear();
    for (int v = 0; v < icx.num_vertices(); ++v)
      names.push_back(icx.vertex_name(v));
    auto gi = share(FiniteGroupoid::pair_groupoid(names));
    std::vector<Subgroupoid> ipieces;
    for (int ch = 0; ch < interval.num_charts(); ++ch) {
      std::vector<int> objs;
      for (int v : interval.chart(ch).vertices)
        objs.push_back(gi->object_index(icx.vertex_name(v)));
      ipieces.push_back(full_subgroupoid(gi, objs));
    }
    auto iresult = globalise(gi, ipieces, default_overlap_opens(interval, *gi));
    auto words = iresult.hol->enumerate_words(8, 100000);
    std::set<std::pair<int, int>> images;
    for (const auto& [obj, w] : words)
      images.insert({obj, iresult.hol->evaluate(obj, w)});
    c.require(words.size() == images.size() && words.size() == 81,
              "interval morphism is not bijective");
  });

  run_criterion(9, "germ machinery: equivalence relation and restrictions",
                [](Criterion& c) {
    std::vector<std::vector<int>> cover;
    for (int i = 0; i + 3 < 12; ++i) cover.push_back({i, i + 1, i + 2, i + 3});
    FiniteSite site = FiniteSite::from_cover(12, cover);
    c.require(site.num_opens() <= 1 << 10, "site larger than 2^10 opens");
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "v%02d", i);
      names.push_back(buf);
    }
    auto g = share(FiniteGroupoid::pair_groupoid(names));
    std::mt19937 rng(901);
    std::uniform_int_distribution<int> pick_open(0, site.num_opens() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_wide = [&](int open_index) {
      std::vector<int> objs = site.open_vertices(open_index);
      std::vector<int> gens;
      for (int x : objs)
        for (int y : objs)
          if (x < y && coin(rng))
            gens.push_back(g->arrow_index(g->object(x) + ">" + g->object(y)));
      return generated_on(g, objs, gens);
    };
    int triples = 0;
    while (triples < 1000) {
      int u = pick_open(rng);
      auto verts = site.open_vertices(u);
      if (verts.empty()) continue;
      ++triples;
      std::uniform_int_distribution<int> pick_pt(
          0, static_cast<int>(verts.size()) - 1);
      int x = verts[pick_pt(rng)];
      Germ a = germ_at(site, x, u, random_wide(u));
      Germ b = germ_at(site, x, u, random_wide(u));
      Germ cc = germ_at(site, x, u, random_wide(u));
      c.require(germ_equal(site, a, a), "reflexivity fails");
      c.require(germ_equal(site, a, b) == germ_equal(site, b, a),
                "symmetry fails");
      if (germ_equal(site, a, b) && germ_equal(site, b, cc))
        c.require(germ_equal(site, a, cc), "transitivity fails");
    }
    // restriction germs compare equal, exhaustively over open pairs
    int restriction_checks = 0;
    for (int u = 0; u < site.num_opens(); ++u) {
      auto u_verts = site.open_vertices(u);
      if (u_verts.empty()) continue;
      Subgroupoid h = full_subgroupoid(g, u_verts);
      for (int w = 0; w < site.num_opens(); ++w) {
        if (w == u) continue;
        if (!site.mask_subset(site.open(w), site.open(u))) continue;
        auto w_verts = site.open_vertices(w);
        if (w_verts.empty()) continue;
        Germ big = germ_at(site, w_verts[0], u, h);
        Germ small = germ_at(site, w_verts[0], w, h.restrict_to(w_verts));
        c.require(germ_equal(site, big, small), "restriction germ differs");
        ++restriction_checks;
      }
    }
    c.require(restriction_checks > 100, "too few restriction checks");
  });

  run_criterion(10, "pipeline determinism of theorem-1", [](Criterion& c) {
    std::string text;
    for (const auto& [name, t] : bundled_scenarios())
      if (name == "gerbe-atlas") text = t;
    Scenario s = parse_scenario_text(text);
    std::string first = run_scenario(s, false).dump();
    for (int i = 0; i < 2; ++i)
      c.require(run_scenario(s, false).dump() == first,
                "sequential reruns differ");
    c.require(run_scenario(s, true).dump() == first,
              "parallel run differs");
    Report rep = run_scenario(s, false);
    c.require(rep.all_pass, "gerbe-atlas pipeline did not pass");
  });

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
