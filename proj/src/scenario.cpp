#include "ghol/scenario.hpp"

#include <algorithm>

namespace ghol {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& need(const Json& obj, const std::string& key,
                 const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    bad(where, "missing required key '" + key + "'");
  return obj.at(key);
}

std::shared_ptr<const CoveredSpace> parse_space(const Json& spec) {
  if (spec.contains("builtin")) {
    std::string name = spec.at("builtin").get<std::string>();
    auto geti = [&](const char* key, int dflt) {
      return spec.contains(key) ? spec.at(key).get<int>() : dflt;
    };
    if (name == "circle-2-charts")
      return std::make_shared<const CoveredSpace>(
          CoveredSpace::analytic(AnalyticSpace::circle_two_charts()));
    if (name == "sphere-2-charts")
      return std::make_shared<const CoveredSpace>(
          CoveredSpace::analytic(AnalyticSpace::sphere_two_charts()));
    if (name == "torus-4-charts-analytic")
      return std::make_shared<const CoveredSpace>(
          CoveredSpace::analytic(AnalyticSpace::torus_four_charts()));
    if (name == "circle-two-arcs")
      return std::make_shared<const CoveredSpace>(
          make_circle_two_arcs(geti("n", 12)));
    if (name == "interval-two-arcs")
      return std::make_shared<const CoveredSpace>(
          make_interval_two_arcs(geti("n", 9)));
    if (name == "torus-4-charts")
      return std::make_shared<const CoveredSpace>(
          make_torus_four_charts(geti("nx", 4), geti("ny", 4)));
    if (name == "torus-full-overlap")
      return std::make_shared<const CoveredSpace>(make_torus_full_overlap(
          geti("nx", 2), geti("ny", 2), geti("charts", 4)));
    if (name == "torus-4-ladders")
      return std::make_shared<const CoveredSpace>(
          make_torus_four_ladders(geti("ny", 4)));
    if (name == "octahedron-2-charts")
      return std::make_shared<const CoveredSpace>(make_octahedron_two_charts());
    if (name == "three-torus-8-charts")
      return std::make_shared<const CoveredSpace>(
          make_three_torus_eight_charts(geti("n", 4)));
    bad("space.builtin", "unknown builtin '" + name + "'");
  }
  if (!spec.contains("complex")) bad("space", "needs 'builtin' or 'complex'");
  const Json& cxj = spec.at("complex");
  std::vector<std::string> vertices;
  for (const Json& v : need(cxj, "vertices", "space.complex"))
    vertices.push_back(v.get<std::string>());
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    vidx[vertices[i]] = static_cast<int>(i);
  std::vector<CellComplex::Edge> edges;
  for (const Json& e : need(cxj, "edges", "space.complex")) {
    if (!e.is_array() || e.size() != 2) bad("space.complex.edges", "edge must be [tail, head]");
    edges.push_back({vidx.at(e[0].get<std::string>()),
                     vidx.at(e[1].get<std::string>())});
  }
  std::vector<CellComplex::Face> faces;
  if (cxj.contains("faces"))
    for (const Json& f : cxj.at("faces")) {
      CellComplex::Face face;
      for (const Json& side : f) {
        int e = side.at("edge").get<int>();
        bool fwd = !side.contains("reversed") || !side.at("reversed").get<bool>();
        face.sides.push_back(fwd ? e : ~e);
      }
      faces.push_back(std::move(face));
    }
  CellComplex cx(std::move(vertices), std::move(edges), std::move(faces));

  std::vector<Chart> charts;
  for (const Json& cj : need(spec, "charts", "space")) {
    Chart chart;
    chart.name = need(cj, "name", "space.charts").get<std::string>();
    for (const Json& v : need(cj, "vertices", "space.charts"))
      chart.vertices.push_back(cx.vertex_index(v.get<std::string>()));
    if (cj.contains("edges"))
      for (const Json& e : cj.at("edges")) chart.edges.push_back(e.get<int>());
    if (cj.contains("faces"))
      for (const Json& f : cj.at("faces")) chart.faces.push_back(f.get<int>());
    charts.push_back(std::move(chart));
  }
  bool require_good = spec.contains("require_good") &&
                      spec.at("require_good").get<bool>();
  return std::make_shared<const CoveredSpace>(
      CoveredSpace::combinatorial(std::move(cx), std::move(charts),
                                  require_good));
}

LineBundleData parse_bundle(const Json& spec,
                            std::shared_ptr<const CoveredSpace> space) {
  if (spec.contains("builtin")) {
    std::string name = spec.at("builtin").get<std::string>();
    int n = spec.contains("n") ? spec.at("n").get<int>() : 1;
    if (name == "trivial") return LineBundleData::trivial(std::move(space));
    if (name == "monopole-sphere") return LineBundleData::monopole_sphere(n);
    if (name == "monopole-octahedron")
      return LineBundleData::monopole_octahedron(n);
    if (name == "flat-torus")
      return LineBundleData::flat_torus(
          std::move(space), parse_turns(need(spec, "flux_x", "bundle")),
          parse_turns(need(spec, "flux_y", "bundle")));
    bad("bundle.builtin", "unknown builtin '" + name + "'");
  }
  LineBundleData b = LineBundleData::trivial(space);
  const CoveredSpace& cs = *space;
  if (spec.contains("transitions")) {
    for (const auto& [key, table] : spec.at("transitions").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        bad("bundle.transitions", "key must be 'chartA,chartB'");
      int i = cs.chart_index(key.substr(0, comma));
      int j = cs.chart_index(key.substr(comma + 1));
      if (i > j) bad("bundle.transitions", "charts must be in sorted order");
      std::map<int, Phase> values;
      for (const auto& [vname, phase] : table.items())
        values[cs.complex().vertex_index(vname)] =
            Phase::turns(parse_turns(phase));
      b.g[{i, j}] = std::move(values);
    }
  }
  if (spec.contains("connections")) {
    for (const auto& [chart_name, table] : spec.at("connections").items()) {
      int c = cs.chart_index(chart_name);
      DiscreteForm form;
      form.degree = 1;
      form.chart = c;
      for (const auto& [edge, value] : table.items())
        form.values[std::stoi(edge)] = parse_turns(value);
      b.conn[c] = std::move(form);
    }
  }
  return b;
}

GerbeData parse_gerbe(const Json& spec,
                      std::shared_ptr<const CoveredSpace> space) {
  if (spec.contains("builtin")) {
    std::string name = spec.at("builtin").get<std::string>();
    if (name == "trivial") return GerbeData::trivial(std::move(space));
    if (name == "flat-torus")
      return GerbeData::flat_torus(std::move(space),
                                   parse_turns(need(spec, "flux", "gerbe")));
    bad("gerbe.builtin", "unknown builtin '" + name + "'");
  }
  GerbeData g = GerbeData::trivial(space);
  const CoveredSpace& cs = *space;
  if (spec.contains("theta"))
    for (const auto& [key, table] : spec.at("theta").items()) {
      // key "i,j,k" by chart names
      std::vector<int> idx;
      std::size_t pos = 0;
      std::string k = key;
      while (true) {
        auto comma = k.find(',', pos);
        idx.push_back(cs.chart_index(k.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (idx.size() != 3) bad("gerbe.theta", "key must name three charts");
      std::map<int, Phase> values;
      for (const auto& [vname, phase] : table.items())
        values[cs.complex().vertex_index(vname)] =
            Phase::turns(parse_turns(phase));
      g.theta[{idx[0], idx[1], idx[2]}] = std::move(values);
    }
  if (spec.contains("a"))
    for (const auto& [key, table] : spec.at("a").items()) {
      auto comma = key.find(',');
      int i = cs.chart_index(key.substr(0, comma));
      int j = cs.chart_index(key.substr(comma + 1));
      DiscreteForm form;
      form.degree = 1;
      for (const auto& [edge, value] : table.items())
        form.values[std::stoi(edge)] = parse_turns(value);
      g.a[{i, j}] = std::move(form);
    }
  if (spec.contains("f"))
    for (const auto& [chart_name, table] : spec.at("f").items()) {
      int c = cs.chart_index(chart_name);
      DiscreteForm form;
      form.degree = 2;
      form.chart = c;
      for (const auto& [face, value] : table.items())
        form.values[std::stoi(face)] = parse_turns(value);
      g.f[c] = std::move(form);
    }
  return g;
}

Curve parse_curve(const Json& spec) {
  std::string type = need(spec, "type", "curve").get<std::string>();
  auto getd = [&](const char* key) { return need(spec, key, "curve").get<double>(); };
  if (type == "latitude")
    return Curve::latitude(getd("theta"), getd("phi0"), getd("phi1"));
  if (type == "meridian")
    return Curve::meridian(getd("phi"), getd("theta0"), getd("theta1"));
  if (type == "arc") return Curve::circle_arc(getd("from"), getd("to"));
  if (type == "torus_line")
    return Curve::torus_line({getd("u0"), getd("v0")}, {getd("u1"), getd("v1")});
  if (type == "constant") return Curve::constant({getd("u"), getd("v")});
  bad("curve.type", "unknown curve '" + type + "'");
}

ThinPath parse_path(const Json& spec,
                    std::shared_ptr<const CoveredSpace> space) {
  std::string kind = need(spec, "kind", "path").get<std::string>();
  if (kind == "combinatorial") {
    const CellComplex& cx = space->complex();
    int start = cx.vertex_index(need(spec, "start", "path").get<std::string>());
    std::vector<Step> steps;
    for (const Json& sj : need(spec, "steps", "path")) {
      int e = need(sj, "edge", "path.steps").get<int>();
      bool rev = sj.contains("reversed") && sj.at("reversed").get<bool>();
      int chart = space->chart_index(
          need(sj, "chart", "path.steps").get<std::string>());
      steps.push_back({rev ? ~e : e, chart});
    }
    return ThinPath::combinatorial(std::move(space), start, std::move(steps));
  }
  if (kind == "smooth") {
    std::vector<SmoothSegment> segs;
    for (const Json& sj : need(spec, "segments", "path")) {
      SmoothSegment seg;
      seg.chart = space->chart_index(
          need(sj, "chart", "path.segments").get<std::string>());
      seg.curve = parse_curve(need(sj, "curve", "path.segments"));
      if (sj.contains("reparam"))
        seg.reparam = Reparam::named(sj.at("reparam").get<std::string>());
      segs.push_back(seg);
    }
    return ThinPath::smooth(std::move(space), std::move(segs));
  }
  bad("path.kind", "unknown kind '" + kind + "'");
}

TwoLoop parse_two_loop(const Json& spec,
                       std::shared_ptr<const CoveredSpace> space) {
  std::vector<Sheet> sheets;
  for (const Json& sj : need(spec, "sheets", "two_loop")) {
    Sheet sheet;
    const Json& faces = need(sj, "faces", "two_loop.sheets");
    if (faces.is_string() && faces.get<std::string>() == "all") {
      for (int f = 0; f < space->complex().num_faces(); ++f)
        sheet.faces.push_back(f);
    } else {
      for (const Json& f : faces) sheet.faces.push_back(f.get<int>());
    }
    if (sj.contains("orient")) sheet.orient = sj.at("orient").get<int>();
    int copies = sj.contains("copies") ? sj.at("copies").get<int>() : 1;
    for (int k = 0; k < copies; ++k) sheets.push_back(sheet);
  }
  return TwoLoop::closed(std::move(space), std::move(sheets));
}

}  // namespace

Rat parse_turns(const Json& value) {
  if (value.is_string()) {
    std::string text = value.get<std::string>();
    auto suffix = text.find(" turns");
    if (suffix != std::string::npos) text = text.substr(0, suffix);
    return Rat::parse(text);
  }
  if (value.is_number_integer()) return Rat(value.get<long long>());
  throw SchemaError("phase values must be exact 'p/q' turn strings");
}

Json phase_to_json(const Phase& p) {
  Json out;
  if (p.is_exact()) out["turns"] = p.exact_turns().str();
  out["turns_value"] = p.turns_value();
  out["radians"] = p.radians_value();
  return out;
}

Json rat_to_json(const Rat& r) {
  Json out;
  out["value"] = r.str();
  out["approx"] = r.to_double();
  return out;
}

const ThinPath& Scenario::path(const std::string& name) const {
  auto it = paths.find(name);
  if (it == paths.end()) throw SchemaError("unknown path '" + name + "'");
  return it->second;
}

const TwoLoop& Scenario::two_loop(const std::string& name) const {
  auto it = two_loops.find(name);
  if (it == two_loops.end()) throw SchemaError("unknown 2-loop '" + name + "'");
  return it->second;
}

const Homotopy& Scenario::homotopy(const std::string& name) const {
  auto it = homotopies.find(name);
  if (it == homotopies.end())
    throw SchemaError("unknown homotopy '" + name + "'");
  return it->second;
}

FiniteGroupoid groupoid_from_json(const Json& doc) {
  std::vector<std::string> objects;
  for (const Json& o : need(doc, "objects", "groupoid"))
    objects.push_back(o.get<std::string>());
  std::map<std::string, int> oidx;
  std::vector<std::string> sorted = objects;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < objects.size(); ++i) oidx[objects[i]] = static_cast<int>(i);

  const Json& comp = need(doc, "composition", "groupoid");
  if (comp.is_string() && comp.get<std::string>() == "pair")
    return FiniteGroupoid::pair_groupoid(objects);

  std::vector<Arrow> arrows;
  for (const Json& aj : need(doc, "arrows", "groupoid")) {
    Arrow a;
    if (aj.contains("id")) a.id = aj.at("id").get<std::string>();
    a.src = oidx.at(need(aj, "src", "groupoid.arrows").get<std::string>());
    a.tgt = oidx.at(need(aj, "tgt", "groupoid.arrows").get<std::string>());
    if (aj.contains("phase")) a.phase = Phase::turns(parse_turns(aj.at("phase")));
    arrows.push_back(std::move(a));
  }
  if (comp.is_string() && comp.get<std::string>() == "gauge")
    return FiniteGroupoid::from_arrows(objects, std::move(arrows), true);
  if (!comp.is_object()) bad("groupoid.composition", "'pair', 'gauge', or a table");
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const auto& [key, value] : comp.items()) {
    auto star = key.find('*');
    if (star == std::string::npos)
      bad("groupoid.composition", "table keys look like 'id1*id2'");
    table[{key.substr(0, star), key.substr(star + 1)}] = value.get<std::string>();
  }
  return FiniteGroupoid::from_table(objects, std::move(arrows), table);
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json out;
  out["objects"] = g.objects();
  Json arrows = Json::array();
  for (const Arrow& a : g.arrows()) {
    Json aj;
    aj["id"] = a.id;
    aj["src"] = g.object(a.src);
    aj["tgt"] = g.object(a.tgt);
    if (a.phase && a.phase->is_exact())
      aj["phase"] = a.phase->exact_turns().str();
    arrows.push_back(std::move(aj));
  }
  out["arrows"] = std::move(arrows);
  Json table = Json::object();
  for (int i = 0; i < g.num_arrows(); ++i)
    for (int j = 0; j < g.num_arrows(); ++j)
      if (g.composable(i, j))
        table[g.arrow(i).id + "*" + g.arrow(j).id] = g.arrow(g.compose(i, j)).id;
  out["composition"] = std::move(table);
  return out;
}

namespace {

GroupTable table_from_json(const Json& mul) {
  std::vector<std::vector<int>> rows;
  for (const Json& r : mul) rows.push_back(r.get<std::vector<int>>());
  std::vector<std::string> names(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) names[i] = "g" + std::to_string(i);
  return GroupTable(names, rows);
}

}  // namespace

CrossedModule crossed_module_from_json(const Json& doc) {
  GroupTable m = table_from_json(need(doc, "m_mul", "crossed_module"));
  GroupTable p = table_from_json(need(doc, "p_mul", "crossed_module"));
  std::vector<int> mu = need(doc, "mu", "crossed_module").get<std::vector<int>>();
  std::vector<std::vector<int>> action;
  for (const Json& row : need(doc, "action", "crossed_module"))
    action.push_back(row.get<std::vector<int>>());
  try {
    return CrossedModule::over_group(std::move(m), std::move(p), std::move(mu),
                                     std::move(action));
  } catch (const InvalidCrossedModule& err) {
    throw SchemaError(std::string("crossed_module: ") + err.what());
  }
}

Json crossed_module_to_json(const CrossedModule& cm) {
  Json out;
  out["base"] = groupoid_to_json(cm.base());
  Json fibers = Json::array();
  for (int x = 0; x < cm.base().num_objects(); ++x) {
    const GroupTable& m = cm.fiber(x);
    Json mul = Json::array();
    for (int a = 0; a < m.order(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < m.order(); ++b) row.push_back(m.mul(a, b));
      mul.push_back(std::move(row));
    }
    Json fj;
    fj["mul"] = std::move(mul);
    Json mu = Json::array();
    for (int a = 0; a < m.order(); ++a)
      mu.push_back(cm.base().arrow(cm.mu(x, a)).id);
    fj["mu"] = std::move(mu);
    fibers.push_back(std::move(fj));
  }
  out["fibers"] = std::move(fibers);
  return out;
}

Scenario parse_scenario(const Json& doc) {
  Scenario s;
  s.name = need(doc, "name", "scenario").get<std::string>();
  if (doc.contains("tolerance")) s.tolerance = doc.at("tolerance").get<double>();
  s.space = parse_space(need(doc, "space", "scenario"));
  if (doc.contains("bundle")) s.bundle = parse_bundle(doc.at("bundle"), s.space);
  if (s.bundle && s.bundle->space != s.space) s.space = s.bundle->space;
  if (doc.contains("gerbe")) s.gerbe = parse_gerbe(doc.at("gerbe"), s.space);
  if (doc.contains("paths"))
    for (const auto& [name, spec] : doc.at("paths").items())
      s.paths.emplace(name, parse_path(spec, s.space));
  if (doc.contains("two_loops"))
    for (const auto& [name, spec] : doc.at("two_loops").items())
      s.two_loops.emplace(name, parse_two_loop(spec, s.space));
  if (doc.contains("homotopies"))
    for (const auto& [name, spec] : doc.at("homotopies").items()) {
      std::vector<int> faces;
      for (const Json& f : need(spec, "faces", "homotopy"))
        faces.push_back(f.get<int>());
      ThinPath from = s.path(need(spec, "from", "homotopy").get<std::string>());
      ThinPath to = s.path(need(spec, "to", "homotopy").get<std::string>());
      s.homotopies.emplace(
          name, Homotopy::between(s.space, std::move(faces), from, to));
    }
  if (doc.contains("atlas")) {
    const Json& aj = doc.at("atlas");
    if (aj.contains("fiber")) s.atlas_fiber = aj.at("fiber").get<int>();
    if (aj.contains("geodesics"))
      s.geodesics = aj.at("geodesics").get<std::string>();
    if (aj.contains("flatness_budget"))
      s.flatness_budget = aj.at("flatness_budget").get<int>();
  }
  for (const Json& vj : need(doc, "verbs", "scenario")) {
    VerbRequest req;
    req.verb = need(vj, "verb", "verbs").get<std::string>();
    req.args = vj;
    s.verbs.push_back(std::move(req));
  }
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw SchemaError(std::string("invalid JSON: ") + err.what());
  }
  try {
    return parse_scenario(doc);
  } catch (const nlohmann::json::exception& err) {
    throw SchemaError(std::string("malformed scenario: ") + err.what());
  }
}

}  // namespace ghol
