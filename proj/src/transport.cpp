#include "ghol/transport.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ghol/integrate.hpp"

namespace ghol {

namespace {

// lowest-index chart containing a combinatorial vertex
int canonical_chart_vertex(const CoveredSpace& space, int v) {
  for (int c = 0; c < space.num_charts(); ++c)
    if (space.chart(c).has_vertex(v)) return c;
  throw ChartMismatch("vertex not covered");
}

int canonical_chart_point(const AnalyticSpace& an, const Pt& p) {
  for (int c = 0; c < an.num_charts(); ++c)
    if (an.contains(c, p)) return c;
  throw ChartMismatch("point not covered");
}

void require_junction_certificate(const CoveredSpace& space, int vertex,
                                  int chart_a, int chart_b) {
  if (!space.chart(chart_a).has_vertex(vertex) ||
      !space.chart(chart_b).has_vertex(vertex))
    throw ChartMismatch("junction vertex " +
                        space.complex().vertex_name(vertex) +
                        " not in the chart overlap");
}

}  // namespace

Phase transport_steps_raw(const LineBundleData& bundle, int start_vertex,
                          const std::vector<Step>& steps) {
  const CoveredSpace& space = *bundle.space;
  const CellComplex& cx = space.complex();
  Phase total;
  if (steps.empty()) return total;
  int at = start_vertex;
  // frame-in: canonical chart -> first step's chart
  int first_chart = steps.front().chart;
  total += bundle.g_vertex(first_chart, canonical_chart_vertex(space, at), at);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Step& s = steps[k];
    if (cx.side_tail(s.side) != at)
      throw EndpointMismatch("steps do not chain");
    total += Phase::turns(bundle.conn_form(s.chart).along(s.side));
    at = cx.side_head(s.side);
    if (k + 1 < steps.size() && steps[k + 1].chart != s.chart) {
      require_junction_certificate(space, at, s.chart, steps[k + 1].chart);
      total += bundle.g_vertex(steps[k + 1].chart, s.chart, at);
    }
  }
  // frame-out: last chart -> canonical chart at the endpoint
  int last_chart = steps.back().chart;
  total += bundle.g_vertex(canonical_chart_vertex(space, at), last_chart, at);
  return total;
}

namespace {

Phase transport_smooth(const LineBundleData& bundle,
                       const std::vector<SmoothSegment>& segs,
                       double upto_fraction_of_last = 1.0) {
  const AnalyticSpace& an = bundle.space->analytic_space();
  Phase total;
  if (segs.empty()) return total;
  Pt start = segs.front().at(0.0);
  total += bundle.g_point(segs.front().chart,
                          canonical_chart_point(an, start), start);
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const SmoothSegment& s = segs[k];
    double t1 = (k + 1 == segs.size()) ? upto_fraction_of_last : 1.0;
    const AnalyticOneForm& form = bundle.conn_analytic(s.chart);
    auto integrand = [&](double t) {
      Pt p = s.at(t);
      Pt vel = s.velocity(t);
      return form.coeff_u(p) * vel.u + form.coeff_v(p) * vel.v;
    };
    total += Phase::radians(gl_integrate(integrand, 0.0, t1, bundle.quad));
    if (t1 < 1.0) {
      Pt end = s.at(t1);
      total += bundle.g_point(canonical_chart_point(an, end), s.chart, end);
      return total;
    }
    Pt end = s.at(1.0);
    if (k + 1 < segs.size() && segs[k + 1].chart != s.chart) {
      if (!an.contains(s.chart, end) || !an.contains(segs[k + 1].chart, end))
        throw ChartMismatch("junction point not in chart overlap");
      total += bundle.g_point(segs[k + 1].chart, s.chart, end);
    }
  }
  Pt end = segs.back().at(1.0);
  total += bundle.g_point(canonical_chart_point(an, end), segs.back().chart,
                          end);
  return total;
}

}  // namespace

TransportResult transport(const LineBundleData& bundle, const ThinPath& path) {
  TransportResult res;
  if (path.kind() == ThinPath::Kind::Combinatorial) {
    if (!bundle.space->is_combinatorial())
      throw KindMismatch("combinatorial path on analytic bundle");
    const CellComplex& cx = bundle.space->complex();
    res.value = transport_steps_raw(bundle, path.start_vertex(), path.steps());
    const auto& steps = path.steps();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const Step& s = steps[k];
      Phase amount = Phase::turns(bundle.conn_form(s.chart).along(s.side));
      res.breakdown.push_back(
          {"edge " + cx.vertex_name(cx.side_tail(s.side)) + ">" +
               cx.vertex_name(cx.side_head(s.side)) + " in " +
               bundle.space->chart_name(s.chart),
           amount});
      if (k + 1 < steps.size() && steps[k + 1].chart != s.chart) {
        int v = cx.side_head(s.side);
        res.breakdown.push_back(
            {"transition " + bundle.space->chart_name(s.chart) + ">" +
                 bundle.space->chart_name(steps[k + 1].chart) + " at " +
                 cx.vertex_name(v),
             bundle.g_vertex(steps[k + 1].chart, s.chart, v)});
      }
    }
    return res;
  }
  if (bundle.space->is_combinatorial())
    throw KindMismatch("smooth path on combinatorial bundle");
  res.value = transport_smooth(bundle, path.segments());
  const auto& segs = path.segments();
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const SmoothSegment& s = segs[k];
    const AnalyticOneForm& form = bundle.conn_analytic(s.chart);
    auto integrand = [&](double t) {
      Pt p = s.at(t);
      Pt vel = s.velocity(t);
      return form.coeff_u(p) * vel.u + form.coeff_v(p) * vel.v;
    };
    res.breakdown.push_back(
        {"segment " + s.curve.str() + " in " +
             bundle.space->chart_name(s.chart),
         Phase::radians(gl_integrate(integrand, 0.0, 1.0, bundle.quad))});
    if (k + 1 < segs.size() && segs[k + 1].chart != s.chart) {
      Pt p = s.at(1.0);
      res.breakdown.push_back(
          {"transition " + bundle.space->chart_name(s.chart) + ">" +
               bundle.space->chart_name(segs[k + 1].chart),
           bundle.g_point(segs[k + 1].chart, s.chart, p)});
    }
  }
  return res;
}

Phase holonomy(const LineBundleData& bundle, const ThinPath& loop) {
  if (!loop.is_loop()) throw NotClosed("holonomy of a non-closed path");
  return transport(bundle, loop).value;
}

Phase partial_transport(const LineBundleData& bundle, const ThinPath& path,
                        double t) {
  if (t < 0 || t > 1) throw Error("partial transport time outside [0,1]");
  if (path.kind() == ThinPath::Kind::Combinatorial) {
    const auto& steps = path.steps();
    double scaled = t * static_cast<double>(steps.size());
    std::size_t k = static_cast<std::size_t>(std::floor(scaled + 1e-9));
    k = std::min(k, steps.size());
    std::vector<Step> prefix(steps.begin(), steps.begin() + k);
    return transport_steps_raw(bundle, path.start_vertex(), prefix);
  }
  const auto& segs = path.segments();
  double scaled = t * static_cast<double>(segs.size());
  std::size_t k = static_cast<std::size_t>(std::floor(scaled + 1e-12));
  double frac = scaled - static_cast<double>(k);
  if (k >= segs.size()) {
    k = segs.size() - 1;
    frac = 1.0;
  }
  std::vector<SmoothSegment> prefix(segs.begin(), segs.begin() + k + 1);
  return transport_smooth(bundle, prefix, frac);
}

ThinPathDouble thin_path_double_groupoid(const LineBundleData& bundle,
                                         const std::vector<ThinPath>& generators,
                                         PathClassMode mode, std::size_t budget) {
  auto class_key = [&](const ThinPath& p, const Phase& hol) {
    if (mode == PathClassMode::ThinClasses) return p.normal_form_key();
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s>%s|%.9f", p.source_label().c_str(),
                  p.target_label().c_str(), hol.turns_value());
    return std::string(buf);
  };

  struct Entry {
    ThinPath path;
    Phase hol;
  };
  std::map<std::string, Entry> family;
  std::vector<std::string> worklist;

  auto add = [&](const ThinPath& p) -> bool {
    Phase h = transport(bundle, p).value;
    std::string key = class_key(p, h);
    if (family.count(key)) return false;
    if (family.size() >= budget)
      throw BudgetExceeded("thin path family closure exceeds " +
                           std::to_string(budget) + " classes");
    family.emplace(key, Entry{p, h});
    worklist.push_back(key);
    return true;
  };

  for (const ThinPath& p : generators) {
    add(p);
    add(reverse(p));
  }
  std::vector<ThinPath> units;
  for (const ThinPath& p : generators) {
    if (p.kind() == ThinPath::Kind::Combinatorial) {
      units.push_back(ThinPath::combinatorial(p.space_ptr(), p.start_vertex(), {}));
      units.push_back(ThinPath::combinatorial(p.space_ptr(), p.end_vertex(), {}));
    } else {
      units.push_back(ThinPath::smooth(
          p.space_ptr(), {{p.segments().front().chart,
                           Curve::constant(p.smooth_start()), Reparam{}}}));
      units.push_back(ThinPath::smooth(
          p.space_ptr(), {{p.segments().back().chart,
                           Curve::constant(p.smooth_end()), Reparam{}}}));
    }
  }
  for (const ThinPath& u : units) add(u);

  for (std::size_t i = 0; i < worklist.size(); ++i) {
    Entry a = family.at(worklist[i]);
    std::vector<std::string> keys;
    for (const auto& [k, e] : family) {
      (void)e;
      keys.push_back(k);
    }
    for (const std::string& k : keys) {
      Entry b = family.at(k);
      if (a.path.target_label() == b.path.source_label())
        add(concat(a.path, b.path));
      if (b.path.target_label() == a.path.source_label())
        add(concat(b.path, a.path));
    }
  }

  std::vector<TransportClassEntry> entries;
  std::vector<std::string> keys;
  for (const auto& [k, e] : family) {
    keys.push_back(k);
    entries.push_back(
        {k, e.path.source_label(), e.path.target_label(), e.hol});
  }
  auto compose_key = [&](const std::string& ka, const std::string& kb) {
    ThinPath ab = concat(family.at(ka).path, family.at(kb).path);
    return class_key(ab, transport(bundle, ab).value);
  };
  AssembledConnection asm_out =
      assemble_connection_double(entries, compose_key, budget);

  ThinPathDouble out{std::move(asm_out.dg), std::move(asm_out.cp), {}};
  for (const std::string& k : keys) out.representatives.push_back(family.at(k).path);
  return out;
}

}  // namespace ghol
