#include <algorithm>

#include "ghol/crossed_module.hpp"
#include "ghol/holonomy_groupoid.hpp"
#include "ghol/loop_space.hpp"
#include "ghol/report.hpp"
#include "ghol/surface_holonomy.hpp"
#include "ghol/transport.hpp"

namespace ghol {

namespace {

Json validation_to_json(const ValidationReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["checks"] = rep.checks;
  Json issues = Json::array();
  for (const auto& issue : rep.issues) {
    Json item;
    item["where"] = issue.where;
    item["what"] = issue.what;
    issues.push_back(item);
  }
  out["issues"] = issues;
  return out;
}

const LineBundleData& need_bundle(const Scenario& s) {
  if (!s.bundle) throw SchemaError("verb requires a bundle");
  return *s.bundle;
}

const GerbeData& need_gerbe(const Scenario& s) {
  if (!s.gerbe) throw SchemaError("verb requires a gerbe");
  return *s.gerbe;
}

// atlas helpers shared by the groupoid-level verbs
struct AtlasData {
  std::shared_ptr<const FiniteGroupoid> model;
  TransportFunctional transport;
};

AtlasData make_atlas_data(const Scenario& s) {
  AtlasData data;
  if (s.bundle) {
    data.model = gauge_model(*s.space, s.atlas_fiber);
    data.transport = bundle_step_transport(data.model, *s.bundle);
  } else {
    const CellComplex& cx = s.space->complex();
    std::vector<std::string> names;
    for (int v = 0; v < cx.num_vertices(); ++v)
      names.push_back(cx.vertex_name(v));
    data.model = share(FiniteGroupoid::pair_groupoid(names));
    data.transport = pair_step_transport(data.model, *s.space);
  }
  return data;
}

Json presentation_to_json(const Presentation& pres) {
  Json out;
  out["generators"] = pres.generators;
  out["relations"] = pres.relations;
  out["free"] = pres.is_free();
  out["rank"] = pres.rank();
  return out;
}

Json verb_validate_bundle(const Scenario& s, const Json&) {
  return validation_to_json(validate_bundle(need_bundle(s), s.tolerance));
}

Json verb_transport(const Scenario& s, const Json& args) {
  const ThinPath& path = s.path(args.at("path").get<std::string>());
  TransportResult res = transport(need_bundle(s), path);
  Json out;
  out["pass"] = true;
  out["path"] = args.at("path");
  out["value"] = phase_to_json(res.value);
  Json pieces = Json::array();
  for (const auto& piece : res.breakdown) {
    Json p;
    p["segment"] = piece.what;
    p["amount"] = phase_to_json(piece.amount);
    pieces.push_back(p);
  }
  out["breakdown"] = pieces;
  return out;
}

Json verb_holonomy(const Scenario& s, const Json& args) {
  const ThinPath& path = s.path(args.at("path").get<std::string>());
  Json out;
  out["pass"] = true;
  out["path"] = args.at("path");
  out["value"] = phase_to_json(holonomy(need_bundle(s), path));
  return out;
}

Json verb_validate_gerbe(const Scenario& s, const Json&) {
  return validation_to_json(validate_gerbe(need_gerbe(s), s.tolerance));
}

Json verb_surface_holonomy(const Scenario& s, const Json& args) {
  const TwoLoop& loop = s.two_loop(args.at("two_loop").get<std::string>());
  Json out;
  out["two_loop"] = args.at("two_loop");
  Phase value = surface_holonomy(need_gerbe(s), loop);
  out["value"] = phase_to_json(value);
  bool sweep = args.contains("sweep_assignments") &&
               args.at("sweep_assignments").get<bool>();
  out["pass"] = true;
  if (sweep) {
    std::vector<int> faces;
    for (const Sheet& sheet : loop.sheets())
      faces.insert(faces.end(), sheet.faces.begin(), sheet.faces.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    auto assignments = enumerate_assignments(*s.space, faces);
    long long agreed = 0;
    for (const Phase& hol : sweep_assignments(need_gerbe(s), faces, assignments))
      if (hol == value) ++agreed;
    out["assignments"] = static_cast<long long>(assignments.size());
    out["assignments_agreeing"] = agreed;
    out["pass"] = agreed == static_cast<long long>(assignments.size());
  }
  return out;
}

Json verb_two_holonomy(const Scenario& s, const Json& args) {
  std::vector<std::pair<std::string, TwoLoop>> family;
  for (const Json& name : args.at("two_loops"))
    family.push_back({name.get<std::string>(),
                      s.two_loop(name.get<std::string>())});
  TwoHolonomyReport rep = two_holonomy(need_gerbe(s), family);
  Json out;
  out["pass"] = rep.homomorphism_ok;
  Json table = Json::array();
  for (const auto& entry : rep.table) {
    Json item;
    item["two_loop"] = entry.name;
    item["value"] = phase_to_json(entry.value);
    table.push_back(item);
  }
  out["table"] = table;
  out["pairs_checked"] = rep.pairs_checked;
  if (!rep.first_failure.empty()) out["first_failure"] = rep.first_failure;
  return out;
}

Json verb_loop_transport(const Scenario& s, const Json& args) {
  const Homotopy& h = s.homotopy(args.at("homotopy").get<std::string>());
  Json out;
  out["pass"] = true;
  out["homotopy"] = args.at("homotopy");
  out["from"] = h.from().normal_form_key();
  out["to"] = h.to().normal_form_key();
  out["value"] = phase_to_json(loop_transport_phase(need_gerbe(s), h));
  return out;
}

Json build_report_to_json(const BuildReport& rep) {
  Json out;
  out["pass"] = rep.geodesics_unique && rep.overlaps_coherent && rep.flat &&
                rep.path_local;
  out["geodesics_unique"] = rep.geodesics_unique;
  out["overlaps_coherent"] = rep.overlaps_coherent;
  out["flat"] = rep.flat;
  out["path_local"] = rep.path_local;
  out["flatness_paths_checked"] = rep.flatness_paths_checked;
  out["path_local_checks"] = rep.path_local_checks;
  if (!rep.first_failure.empty()) out["first_failure"] = rep.first_failure;
  return out;
}

Json verb_build_local_subgroupoid(const Scenario& s, const Json&) {
  if (s.geodesics != "bfs-lex")
    throw SchemaError("only bfs-lex geodesics are available");
  AtlasData data = make_atlas_data(s);
  GeodesicStructure geod = bfs_lex_geodesics(*s.space);
  auto [local, rep] =
      build_local_subgroupoid(*s.space, geod, data.transport,
                              s.flatness_budget, /*strict=*/false);
  Json out = build_report_to_json(rep);
  Json pieces = Json::array();
  for (const AtlasPiece& piece : local.atlas) {
    Json p;
    p["chart"] = s.space->chart_name(piece.chart);
    p["objects"] = piece.chart_objects.size();
    p["arrows"] = piece.piece.arrows.size();
    pieces.push_back(p);
  }
  out["atlas"] = pieces;
  out["site_opens"] = local.site.num_opens();
  return out;
}

Json verb_globalise(const Scenario& s, const Json& args) {
  AtlasData data = make_atlas_data(s);
  std::vector<Subgroupoid> pieces;
  for (int c = 0; c < s.space->num_charts(); ++c)
    pieces.push_back(c_upsilon(*s.space, c, data.transport));
  auto result = globalise(data.model, pieces,
                          default_overlap_opens(*s.space, *data.model));
  Json out;
  out["glob_arrows"] = result.glob.arrows.size();
  std::string base = args.contains("base")
                         ? args.at("base").get<std::string>()
                         : s.space->complex().vertex_name(0);
  int obj = data.model->object_index(base);
  auto [loops, table] = result.glob.vertex_group(obj);
  out["glob_vertex_order"] = loops.size();
  out["hol_vertex_presentation"] =
      presentation_to_json(result.hol->vertex_presentation(obj));
  auto check = result.hol->check_covering_morphism(
      data.model->num_objects(), 1000, 20240611);
  out["covering_morphism_ok"] = check.ok;
  out["covering_morphism_pairs"] = check.pairs;
  out["completion_rules_added"] =
      result.hol->words().completion_rules_added();
  out["pass"] = check.ok;
  return out;
}

Json verb_theorem_1(const Scenario& s, const Json& args) {
  const LineBundleData& bundle = need_bundle(s);
  const CoveredSpace& space = *s.space;
  const CellComplex& cx = space.complex();
  Json out;

  // stage 1: derived Deligne data h_ijk = u_ik^-1 u_ij u_jk and
  // A_ij = A_i - A_j - dlog u_ij; for honest bundle data both vanish
  GerbeData derived = GerbeData::trivial(s.space);
  for (const NerveEntry& entry : space.nerve()) {
    if (entry.charts.size() == 3) {
      int i = entry.charts[0], j = entry.charts[1], k = entry.charts[2];
      std::map<int, Phase> values;
      for (int v : space.overlap_vertices(entry.charts))
        values[v] = bundle.g_vertex(i, j, v) + bundle.g_vertex(j, k, v) +
                    bundle.g_vertex(k, i, v);
      derived.theta[{i, j, k}] = std::move(values);
    }
    if (entry.charts.size() == 2) {
      int i = entry.charts[0], j = entry.charts[1];
      DiscreteForm form;
      form.degree = 1;
      for (int e : space.overlap_edges(entry.charts)) {
        Phase dlog = bundle.g_vertex(i, j, cx.edge(e).head) -
                     bundle.g_vertex(i, j, cx.edge(e).tail);
        Rat value = bundle.conn_form(i).at(e) - bundle.conn_form(j).at(e) -
                    dlog.exact_turns();
        if (!value.is_zero()) form.values[e] = value;
      }
      derived.a[{i, j}] = std::move(form);
    }
  }
  for (int c = 0; c < space.num_charts(); ++c) {
    DiscreteForm curv = d(cx, bundle.conn_form(c));
    curv.chart = c;
    DiscreteForm restricted;
    restricted.degree = 2;
    restricted.chart = c;
    for (int f : space.chart(c).faces) {
      Rat v = curv.at(f);
      if (!v.is_zero()) restricted.values[f] = v;
    }
    derived.f[c] = std::move(restricted);
  }
  out["bundle_validation"] = validation_to_json(validate_bundle(bundle, s.tolerance));
  out["derived_gerbe_validation"] =
      validation_to_json(validate_gerbe(derived, s.tolerance));

  // stage 2-3: per-chart path connections and the local subgroupoid
  AtlasData data = make_atlas_data(s);
  GeodesicStructure geod = bfs_lex_geodesics(space);
  auto [local, rep] = build_local_subgroupoid(space, geod, data.transport,
                                              s.flatness_budget,
                                              /*strict=*/false);
  out["local_subgroupoid"] = build_report_to_json(rep);

  // stage 4: globalisation
  out["globalise"] = verb_globalise(s, args);
  out["pass"] = out["bundle_validation"]["pass"].get<bool>() &&
                out["derived_gerbe_validation"]["pass"].get<bool>() &&
                out["local_subgroupoid"]["pass"].get<bool>() &&
                out["globalise"]["pass"].get<bool>();
  return out;
}

Json verb_double_check(const Scenario& s, const Json& args) {
  Json out;
  if (args.contains("crossed_module")) {
    // law sweeps on the double groupoid of a serialized crossed module,
    // plus the round trip back
    auto cm = std::make_shared<const CrossedModule>(
        crossed_module_from_json(args.at("crossed_module")));
    auto [dg, cp] = double_from_crossed_module(cm);
    auto laws = dg.check_laws();
    auto law = check_transport_law(cp, dg);
    CrossedModule back = crossed_module_from_double(dg, cp);
    auto iso = find_crossed_module_iso(*cm, back);
    out["squares"] = dg.squares().size();
    out["interchange_pass"] = laws.pass;
    out["interchange_checked"] = laws.checked_interchange;
    out["transport_law_pass"] = law.pass;
    out["round_trip_isomorphic"] = iso.has_value();
    out["recovered"] = crossed_module_to_json(back);
    out["pass"] = laws.pass && law.pass && iso.has_value();
    return out;
  }
  std::vector<ThinPath> gens;
  if (args.contains("paths"))
    for (const Json& name : args.at("paths"))
      gens.push_back(s.path(name.get<std::string>()));
  else
    for (const auto& [name, p] : s.paths) {
      (void)name;
      gens.push_back(p);
    }
  if (gens.empty()) throw SchemaError("double-check needs at least one path");
  PathClassMode mode = PathClassMode::TransportClasses;
  if (args.contains("classes") &&
      args.at("classes").get<std::string>() == "thin")
    mode = PathClassMode::ThinClasses;
  ThinPathDouble tpd = thin_path_double_groupoid(need_bundle(s), gens, mode);
  TransportLawReport law = check_transport_law(tpd.cp, tpd.dg);
  auto laws = tpd.dg.check_laws();
  out["transport_law_pass"] = law.pass;
  out["transport_law_pairs"] = law.pairs_checked;
  if (!law.first_failure.empty()) out["first_failure"] = law.first_failure;
  out["interchange_pass"] = laws.pass;
  out["interchange_checked"] = laws.checked_interchange;
  out["squares"] = tpd.dg.squares().size();
  out["v_arrows"] = tpd.dg.vert().num_arrows();
  out["pass"] = law.pass && laws.pass;
  return out;
}

}  // namespace

Json run_verb(const Scenario& s, const VerbRequest& req) {
  Json out;
  out["verb"] = req.verb;
  Json result;
  if (req.verb == "validate-bundle")
    result = verb_validate_bundle(s, req.args);
  else if (req.verb == "transport")
    result = verb_transport(s, req.args);
  else if (req.verb == "holonomy")
    result = verb_holonomy(s, req.args);
  else if (req.verb == "validate-gerbe")
    result = verb_validate_gerbe(s, req.args);
  else if (req.verb == "surface-holonomy")
    result = verb_surface_holonomy(s, req.args);
  else if (req.verb == "two-holonomy")
    result = verb_two_holonomy(s, req.args);
  else if (req.verb == "loop-transport")
    result = verb_loop_transport(s, req.args);
  else if (req.verb == "build-local-subgroupoid")
    result = verb_build_local_subgroupoid(s, req.args);
  else if (req.verb == "globalise")
    result = verb_globalise(s, req.args);
  else if (req.verb == "theorem-1")
    result = verb_theorem_1(s, req.args);
  else if (req.verb == "double-check")
    result = verb_double_check(s, req.args);
  else
    throw UnknownVerb(req.verb);
  for (auto& [key, value] : result.items()) out[key] = value;
  return out;
}

std::vector<std::string> known_verbs() {
  return {"validate-bundle",  "transport",  "holonomy",
          "validate-gerbe",   "surface-holonomy", "two-holonomy",
          "loop-transport",   "build-local-subgroupoid", "globalise",
          "theorem-1",        "double-check"};
}

std::string explain_verb(const std::string& verb) {
  if (verb == "validate-bundle")
    return "Checks the transition cocycle g_ij g_jk g_ki = 1 on triple "
           "overlaps and the compatibility A_i - A_j = dlog g_ij per "
           "overlap edge (exact on the combinatorial backend, sampled "
           "within tolerance on analytic overlaps).";
  if (verb == "transport")
    return "Parallel transport of a chart-tagged thin path: the sum of "
           "per-segment connection integrals plus transition phases at "
           "chart switches, with endpoints referred to canonical frames "
           "so that transport is additive under concatenation.";
  if (verb == "holonomy")
    return "Transport of a closed loop; functorial on thin classes and "
           "invariant under backtrack insertion and reparametrization.";
  if (verb == "validate-gerbe")
    return "Checks the three Deligne cochain identities: delta theta = 1 "
           "on quadruple overlaps, A_ij + A_jk + A_ki = -dlog theta_ijk "
           "on triple overlaps, and F_i - F_j = dA_ij on double overlaps.";
  if (verb == "surface-holonomy")
    return "Evaluates the surface holonomy of a closed 2-loop by the "
           "face/edge/vertex local formula: curvings over assigned faces, "
           "overlap 1-forms along interior edges, and trivialization "
           "phases around vertex fans. Independent of the assignment; "
           "pass sweep_assignments to verify exhaustively.";
  if (verb == "two-holonomy")
    return "Tabulates surface holonomies over a family of 2-loops and "
           "verifies the homomorphism law Hol(s1 * s2) = Hol(s1) Hol(s2) "
           "and Hol(s * s^-1) = 1 on all pairs.";
  if (verb == "loop-transport")
    return "Transport along a homotopy of based loops: the cylindrical "
           "groupoid arrow phase, computed by the surface-holonomy "
           "machinery on the open cylinder with collar charts from the "
           "loops' own tags.";
  if (verb == "build-local-subgroupoid")
    return "Builds per-chart transport-reachability subgroupoids over a "
           "geodesic atlas (bfs-lex), verifying geodesic uniqueness, "
           "overlap coherence, flatness, and the path-locality of the "
           "cover over the finite topology.";
  if (verb == "globalise")
    return "Globalises the atlas pieces: glob is the subgroupoid they "
           "generate; the holonomy groupoid is the word-level "
           "resolution (reduced words over the disjoint union of pieces "
           "modulo identity deletion, in-piece merging, and overlap "
           "identification), with the covering morphism onto glob.";
  if (verb == "theorem-1")
    return "End-to-end pipeline: per-chart bundle data -> derived Deligne "
           "cocycle (h_ijk from the transitions) -> per-chart path "
           "connections -> geodesic local subgroupoid -> globalisation "
           "into the holonomy groupoid.";
  if (verb == "double-check")
    return "Builds the double groupoid of transported path lifts over the "
           "scenario's path family and sweeps the transport law and the "
           "interchange law over all composable pairs.";
  throw UnknownVerb(verb);
}

}  // namespace ghol
