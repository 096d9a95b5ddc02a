#include "ghol/thin_path.hpp"

#include <cmath>

namespace ghol {

double Reparam::at(double t) const {
  switch (kind) {
    case Kind::Identity:
      return t;
    case Kind::Square:
      return t * t;
    case Kind::Cubic:
      return t * t * t;
    case Kind::Smoothstep:
      return t * t * (3.0 - 2.0 * t);
    case Kind::Wiggle:
      return t + 0.3 * std::sin(kTwoPi * t);
  }
  return t;
}

double Reparam::deriv(double t) const {
  switch (kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::Square:
      return 2.0 * t;
    case Kind::Cubic:
      return 3.0 * t * t;
    case Kind::Smoothstep:
      return 6.0 * t * (1.0 - t);
    case Kind::Wiggle:
      return 1.0 + 0.3 * kTwoPi * std::cos(kTwoPi * t);
  }
  return 1.0;
}

bool Reparam::monotone() const {
  for (int k = 0; k <= 256; ++k)
    if (deriv(k / 256.0) < 0) return false;
  return true;
}

Reparam Reparam::named(const std::string& name) {
  if (name == "identity") return {Kind::Identity};
  if (name == "square") return {Kind::Square};
  if (name == "cubic") return {Kind::Cubic};
  if (name == "smoothstep") return {Kind::Smoothstep};
  if (name == "wiggle") return {Kind::Wiggle};
  throw Error("unknown reparametrization: " + name);
}

std::string Reparam::str() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Square:
      return "square";
    case Kind::Cubic:
      return "cubic";
    case Kind::Smoothstep:
      return "smoothstep";
    case Kind::Wiggle:
      return "wiggle";
  }
  return "identity";
}

Pt SmoothSegment::velocity(double t) const {
  Pt v = curve.velocity(reparam.at(t));
  double dpsi = reparam.deriv(t);
  return {v.u * dpsi, v.v * dpsi};
}

std::vector<Step> normalize_steps(std::vector<Step> steps) {
  std::vector<Step> out;
  for (const Step& s : steps) {
    if (!out.empty() &&
        CellComplex::side_edge(out.back().side) == CellComplex::side_edge(s.side) &&
        CellComplex::side_forward(out.back().side) !=
            CellComplex::side_forward(s.side)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

ThinPath ThinPath::combinatorial(std::shared_ptr<const CoveredSpace> space,
                                 int start_vertex, std::vector<Step> steps) {
  if (!space->is_combinatorial())
    throw KindMismatch("combinatorial path on analytic space");
  const CellComplex& cx = space->complex();
  if (start_vertex < 0 || start_vertex >= cx.num_vertices())
    throw Error("start vertex out of range");
  int at = start_vertex;
  for (const Step& s : steps) {
    if (CellComplex::side_edge(s.side) >= cx.num_edges())
      throw Error("path step references unknown edge");
    if (cx.side_tail(s.side) != at)
      throw EndpointMismatch("path steps do not chain");
    const Chart& chart = space->chart(s.chart);
    if (!chart.has_edge(CellComplex::side_edge(s.side)))
      throw ChartMismatch("step edge not in its declared chart");
    at = cx.side_head(s.side);
  }
  ThinPath p;
  p.kind_ = Kind::Combinatorial;
  p.space_ = std::move(space);
  p.start_vertex_ = start_vertex;
  p.steps_ = normalize_steps(std::move(steps));
  return p;
}

ThinPath ThinPath::smooth(std::shared_ptr<const CoveredSpace> space,
                          std::vector<SmoothSegment> segments,
                          double sitting_eps) {
  if (space->is_combinatorial())
    throw KindMismatch("smooth path on combinatorial space");
  const AnalyticSpace& an = space->analytic_space();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const SmoothSegment& s = segments[k];
    if (!s.reparam.monotone()) throw NonMonotone(s.reparam.str());
    // chart certificate: sampled points of the segment lie in its chart
    for (int i = 0; i <= 16; ++i)
      if (!an.contains(s.chart, s.at(i / 16.0)))
        throw ChartMismatch("segment " + std::to_string(k) + " leaves chart " +
                            an.chart_name(s.chart));
    if (k > 0) {
      Pt prev = segments[k - 1].at(1.0);
      Pt cur = s.at(0.0);
      if (!an.same_point(prev, cur))
        throw EndpointMismatch("smooth segments do not chain");
      // junction certificate: the junction lies in both charts
      if (!an.contains(segments[k - 1].chart, cur) || !an.contains(s.chart, cur))
        throw ChartMismatch("junction point not in chart overlap");
    }
  }
  ThinPath p;
  p.kind_ = Kind::Smooth;
  p.space_ = std::move(space);
  p.segments_ = std::move(segments);
  p.sitting_eps_ = sitting_eps;
  return p;
}

int ThinPath::start_vertex() const {
  if (kind_ != Kind::Combinatorial) throw KindMismatch("smooth path");
  return start_vertex_;
}

int ThinPath::end_vertex() const {
  if (kind_ != Kind::Combinatorial) throw KindMismatch("smooth path");
  int at = start_vertex_;
  for (const Step& s : steps_) at = space_->complex().side_head(s.side);
  return at;
}

const std::vector<Step>& ThinPath::steps() const {
  if (kind_ != Kind::Combinatorial) throw KindMismatch("smooth path");
  return steps_;
}

const std::vector<SmoothSegment>& ThinPath::segments() const {
  if (kind_ != Kind::Smooth) throw KindMismatch("combinatorial path");
  return segments_;
}

Pt ThinPath::smooth_start() const { return segments().front().at(0.0); }
Pt ThinPath::smooth_end() const { return segments().back().at(1.0); }

bool ThinPath::is_loop() const {
  if (kind_ == Kind::Combinatorial) return end_vertex() == start_vertex_;
  if (segments_.empty()) return true;
  return space_->analytic_space().same_point(smooth_start(), smooth_end());
}

bool ThinPath::is_constant() const {
  if (kind_ == Kind::Combinatorial) return steps_.empty();
  for (const auto& s : segments_)
    if (!(s.curve.kind == Curve::Kind::Constant)) return false;
  return true;
}

namespace {

std::string point_label(const AnalyticSpace& an, const Pt& raw) {
  Pt p = an.canonical_point(raw);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.9g,%.9g)", p.u + 0.0, p.v + 0.0);
  return buf;
}

}  // namespace

std::string ThinPath::source_label() const {
  if (kind_ == Kind::Combinatorial)
    return space_->complex().vertex_name(start_vertex_);
  return point_label(space_->analytic_space(), smooth_start());
}

std::string ThinPath::target_label() const {
  if (kind_ == Kind::Combinatorial)
    return space_->complex().vertex_name(end_vertex());
  return point_label(space_->analytic_space(), smooth_end());
}

std::string ThinPath::normal_form_key() const {
  std::string key = source_label() + ":";
  if (kind_ == Kind::Combinatorial) {
    for (const Step& s : steps_) {
      int e = CellComplex::side_edge(s.side);
      key += (CellComplex::side_forward(s.side) ? "+" : "-") + std::to_string(e);
    }
    return key;
  }
  // formal word in named segments, reduced against adjacent reversals
  std::vector<const SmoothSegment*> word;
  for (const auto& s : segments_) {
    if (s.curve.kind == Curve::Kind::Constant) continue;
    if (!word.empty() && word.back()->curve == s.curve.reversed())
      word.pop_back();
    else
      word.push_back(&s);
  }
  for (const auto* s : word) key += "[" + s->curve.str() + "]";
  return key;
}

ThinPath concat(const ThinPath& a, const ThinPath& b) {
  if (a.kind_ != b.kind_) throw KindMismatch("concat of mixed path kinds");
  if (a.space_.get() != b.space_.get())
    throw Error("concat of paths on different spaces");
  if (a.kind_ == ThinPath::Kind::Combinatorial) {
    if (a.end_vertex() != b.start_vertex_)
      throw EndpointMismatch("concat endpoints disagree");
    std::vector<Step> steps = a.steps_;
    steps.insert(steps.end(), b.steps_.begin(), b.steps_.end());
    return ThinPath::combinatorial(a.space_, a.start_vertex_, std::move(steps));
  }
  if (!a.space_->analytic_space().same_point(a.smooth_end(), b.smooth_start()))
    throw EndpointMismatch("concat endpoints disagree");
  std::vector<SmoothSegment> segs = a.segments_;
  segs.insert(segs.end(), b.segments_.begin(), b.segments_.end());
  return ThinPath::smooth(a.space_, std::move(segs),
                          std::min(a.sitting_eps_, b.sitting_eps_));
}

ThinPath reverse(const ThinPath& p) {
  if (p.kind_ == ThinPath::Kind::Combinatorial) {
    std::vector<Step> steps;
    for (auto it = p.steps_.rbegin(); it != p.steps_.rend(); ++it)
      steps.push_back({~it->side, it->chart});
    return ThinPath::combinatorial(p.space_, p.end_vertex(), std::move(steps));
  }
  std::vector<SmoothSegment> segs;
  for (auto it = p.segments_.rbegin(); it != p.segments_.rend(); ++it)
    segs.push_back({it->chart, it->curve.reversed(), it->reparam});
  return ThinPath::smooth(p.space_, std::move(segs), p.sitting_eps_);
}

ThinPath reparametrize(const ThinPath& p, const Reparam& psi) {
  if (!psi.monotone()) throw NonMonotone(psi.str());
  if (p.kind_ == ThinPath::Kind::Combinatorial) return p;
  std::vector<SmoothSegment> segs;
  for (const auto& s : p.segments_) {
    if (s.reparam.kind != Reparam::Kind::Identity && psi.kind != Reparam::Kind::Identity)
      throw Error("stacked reparametrizations are not supported");
    SmoothSegment t = s;
    if (psi.kind != Reparam::Kind::Identity) t.reparam = psi;
    segs.push_back(t);
  }
  return ThinPath::smooth(p.space_, std::move(segs), p.sitting_eps_);
}

bool thin_equal(const ThinPath& a, const ThinPath& b) {
  if (a.kind() != ThinPath::Kind::Combinatorial ||
      b.kind() != ThinPath::Kind::Combinatorial)
    throw KindMismatch("thin_equal decides the combinatorial kind only");
  if (a.start_vertex() != b.start_vertex() || a.end_vertex() != b.end_vertex())
    return false;
  auto word = [](const ThinPath& p) {
    std::vector<int> w;
    for (const Step& s : p.steps()) w.push_back(s.side);
    return w;
  };
  return word(a) == word(b);
}

}  // namespace ghol
