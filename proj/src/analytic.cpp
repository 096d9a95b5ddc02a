#include "ghol/analytic.hpp"

#include <cmath>
#include <cstdio>

#include "ghol/errors.hpp"

namespace ghol {

namespace {

double wrap1(double x) {
  double w = std::fmod(x, 1.0);
  return w < 0 ? w + 1.0 : w;
}

// membership of wrapped coordinate in an interval (lo, hi) given mod 1
bool in_wrapped(double x, double lo, double hi) {
  double w = wrap1(x);
  double l = wrap1(lo), h = wrap1(hi);
  if (l < h) return w > l && w < h;
  return w > l || w < h;
}

constexpr double kSphereNorthMax = 2.2;                 // theta upper bound
constexpr double kSphereSouthMin = 3.14159265358979 - 2.2;

}  // namespace

AnalyticSpace AnalyticSpace::circle_two_charts() {
  AnalyticSpace s;
  s.kind_ = Kind::Circle2;
  s.name_ = "circle-2-charts";
  s.chart_names_ = {"U1", "U2"};
  // U1 = angle/2pi in (0.90, 0.55) wrapped, U2 = (0.40, 0.05) wrapped:
  // the overlap has two components, near 0 and near 1/2.
  s.nerve_ = {{{0}, 1, true}, {{1}, 1, true}, {{0, 1}, 2, false}};
  s.good_ = false;
  return s;
}

AnalyticSpace AnalyticSpace::sphere_two_charts() {
  AnalyticSpace s;
  s.kind_ = Kind::Sphere2;
  s.name_ = "sphere-2-charts";
  s.chart_names_ = {"N", "S"};
  s.nerve_ = {{{0}, 1, true}, {{1}, 1, true}, {{0, 1}, 1, true}};
  s.good_ = true;  // asserted: the standard north/south presentation
  return s;
}

AnalyticSpace AnalyticSpace::torus_four_charts() {
  AnalyticSpace s;
  s.kind_ = Kind::Torus4;
  s.name_ = "torus-4-charts";
  s.chart_names_ = {"U00", "U10", "U01", "U11"};
  s.good_ = false;  // adjacent overlaps have two components
  for (int i = 0; i < 4; ++i) s.nerve_.push_back({{i}, 1, true});
  s.nerve_.push_back({{0, 1}, 2, false});
  s.nerve_.push_back({{0, 2}, 2, false});
  s.nerve_.push_back({{1, 3}, 2, false});
  s.nerve_.push_back({{2, 3}, 2, false});
  s.nerve_.push_back({{0, 3}, 4, false});
  s.nerve_.push_back({{1, 2}, 4, false});
  s.nerve_.push_back({{0, 1, 2}, 4, false});
  s.nerve_.push_back({{0, 1, 3}, 4, false});
  s.nerve_.push_back({{0, 2, 3}, 4, false});
  s.nerve_.push_back({{1, 2, 3}, 4, false});
  s.nerve_.push_back({{0, 1, 2, 3}, 4, false});
  return s;
}

int AnalyticSpace::chart_index(const std::string& name) const {
  for (int i = 0; i < num_charts(); ++i)
    if (chart_names_[i] == name) return i;
  throw ChartMismatch("unknown chart " + name + " on " + name_);
}

bool AnalyticSpace::contains(int chart, const Pt& p) const {
  switch (kind_) {
    case Kind::Circle2: {
      double t = p.u / kTwoPi;  // angle as turns
      if (chart == 0) return in_wrapped(t, 0.90, 0.55);
      return in_wrapped(t, 0.40, 0.05);
    }
    case Kind::Sphere2:
      if (chart == 0) return p.u >= 0 && p.u < kSphereNorthMax;
      return p.u > kSphereSouthMin && p.u <= 3.14159265358979324;
    case Kind::Torus4: {
      int a = chart % 2, b = chart / 2;
      double lo_u = a * 0.5 - 0.15, hi_u = a * 0.5 + 0.65;
      double lo_v = b * 0.5 - 0.15, hi_v = b * 0.5 + 0.65;
      return in_wrapped(p.u, lo_u, hi_u) && in_wrapped(p.v, lo_v, hi_v);
    }
  }
  return false;
}

std::vector<Pt> AnalyticSpace::overlap_samples(int a, int b, int count) const {
  std::vector<Pt> out;
  switch (kind_) {
    case Kind::Circle2: {
      // two intervals: around angle 0 and around angle pi
      for (int k = 0; k < count; ++k) {
        double t = (k + 1.0) / (count + 1.0);
        out.push_back({kTwoPi * (0.40 + 0.15 * t), 0});   // (0.40, 0.55)
        out.push_back({kTwoPi * (0.90 + 0.15 * t), 0});   // (0.90, 1.05)
      }
      break;
    }
    case Kind::Sphere2: {
      double mid = 0.5 * (kSphereNorthMax + kSphereSouthMin);
      for (int k = 0; k < count; ++k) {
        double phi = kTwoPi * k / count;
        out.push_back({mid, phi});
        out.push_back({kSphereSouthMin + 0.1, phi});
        out.push_back({kSphereNorthMax - 0.1, phi});
      }
      break;
    }
    case Kind::Torus4: {
      // grid scan; keep points lying in both chart domains
      int steps = std::max(count, 8);
      for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j) {
          Pt p{(i + 0.5) / steps, (j + 0.5) / steps};
          if (contains(a, p) && contains(b, p)) out.push_back(p);
        }
      break;
    }
  }
  return out;
}

std::vector<Curve> AnalyticSpace::overlap_check_segments(int a, int b) const {
  std::vector<Curve> out;
  switch (kind_) {
    case Kind::Circle2: {
      for (int k = 0; k < 4; ++k) {
        double lo = 0.41 + 0.03 * k;
        out.push_back(Curve::circle_arc(kTwoPi * lo, kTwoPi * (lo + 0.03)));
        double lo2 = 0.91 + 0.03 * k;
        out.push_back(Curve::circle_arc(kTwoPi * lo2, kTwoPi * (lo2 + 0.03)));
      }
      break;
    }
    case Kind::Sphere2: {
      double mid = 0.5 * (kSphereNorthMax + kSphereSouthMin);
      for (double theta : {kSphereSouthMin + 0.1, mid, kSphereNorthMax - 0.1})
        for (int k = 0; k < 8; ++k)
          out.push_back(Curve::latitude(theta, kTwoPi * k / 8.0,
                                        kTwoPi * (k + 1) / 8.0));
      // a short meridian arc inside the band
      out.push_back(Curve::meridian(0.3, mid - 0.2, mid + 0.2));
      break;
    }
    case Kind::Torus4: {
      auto pts = overlap_samples(a, b, 12);
      for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        Pt p = pts[i], q = pts[i + 1];
        if (std::fabs(p.u - q.u) + std::fabs(p.v - q.v) < 0.2 &&
            contains(a, {0.5 * (p.u + q.u), 0.5 * (p.v + q.v)}) &&
            contains(b, {0.5 * (p.u + q.u), 0.5 * (p.v + q.v)}))
          out.push_back(Curve::torus_line(p, q));
      }
      break;
    }
  }
  return out;
}

int AnalyticSpace::overlap_component(int a, int b, const Pt& p) const {
  switch (kind_) {
    case Kind::Circle2: {
      double t = wrap1(p.u / kTwoPi);
      return (t > 0.40 && t < 0.55) ? 0 : 1;
    }
    case Kind::Sphere2:
      return 0;
    case Kind::Torus4: {
      // component determined by which half-strips the point sits in
      (void)a;
      (void)b;
      int iu = wrap1(p.u) < 0.5 ? 0 : 1;
      int iv = wrap1(p.v) < 0.5 ? 0 : 1;
      return iu * 2 + iv;
    }
  }
  return 0;
}

bool AnalyticSpace::same_point(const Pt& a, const Pt& b, double tol) const {
  auto wrap_close = [&](double x, double y, double period) {
    double d = std::fabs(std::fmod(x - y, period));
    if (d < 0) d += period;
    return std::min(d, period - d) <= tol;
  };
  switch (kind_) {
    case Kind::Circle2:
      return wrap_close(a.u, b.u, kTwoPi);
    case Kind::Sphere2: {
      if (std::fabs(a.u - b.u) > tol) return false;
      double pi = kTwoPi / 2;
      if (a.u <= tol || a.u >= pi - tol) return true;  // at a pole
      return wrap_close(a.v, b.v, kTwoPi);
    }
    case Kind::Torus4:
      return wrap_close(a.u, b.u, 1.0) && wrap_close(a.v, b.v, 1.0);
  }
  return false;
}

Pt AnalyticSpace::canonical_point(const Pt& p) const {
  auto wrap = [](double x, double period) {
    double w = std::fmod(x, period);
    if (w < 0) w += period;
    if (period - w < 1e-9) w = 0.0;
    return w;
  };
  switch (kind_) {
    case Kind::Circle2:
      return {wrap(p.u, kTwoPi), 0};
    case Kind::Sphere2: {
      double pi = kTwoPi / 2;
      if (p.u <= 1e-9 || p.u >= pi - 1e-9) return {p.u <= 1e-9 ? 0.0 : pi, 0};
      return {p.u, wrap(p.v, kTwoPi)};
    }
    case Kind::Torus4:
      return {wrap(p.u, 1.0), wrap(p.v, 1.0)};
  }
  return p;
}

Pt Curve::at(double t) const {
  switch (kind) {
    case Kind::Constant:
      return p0;
    case Kind::CircleArc:
      return {p0.u + t * (p1.u - p0.u), 0};
    case Kind::Latitude:
      return {p0.u, p0.v + t * (p1.v - p0.v)};
    case Kind::Meridian:
      return {p0.u + t * (p1.u - p0.u), p0.v};
    case Kind::TorusLine:
      return {p0.u + t * (p1.u - p0.u), p0.v + t * (p1.v - p0.v)};
  }
  return p0;
}

Pt Curve::velocity(double) const {
  switch (kind) {
    case Kind::Constant:
      return {0, 0};
    case Kind::CircleArc:
      return {p1.u - p0.u, 0};
    case Kind::Latitude:
      return {0, p1.v - p0.v};
    case Kind::Meridian:
      return {p1.u - p0.u, 0};
    case Kind::TorusLine:
      return {p1.u - p0.u, p1.v - p0.v};
  }
  return {0, 0};
}

Curve Curve::reversed() const {
  Curve c = *this;
  c.p0 = p1;
  c.p1 = p0;
  if (kind == Kind::Latitude) c.p0.u = c.p1.u = p0.u;
  if (kind == Kind::Meridian) c.p0.v = c.p1.v = p0.v;
  return c;
}

Curve Curve::sub(double a, double b) const {
  Curve c = *this;
  Pt pa = at(a), pb = at(b);
  c.p0 = pa;
  c.p1 = pb;
  return c;
}

Curve Curve::constant(Pt p) { return {Kind::Constant, p, p}; }
Curve Curve::circle_arc(double u0, double u1) {
  return {Kind::CircleArc, {u0, 0}, {u1, 0}};
}
Curve Curve::latitude(double theta, double phi0, double phi1) {
  return {Kind::Latitude, {theta, phi0}, {theta, phi1}};
}
Curve Curve::meridian(double phi, double theta0, double theta1) {
  return {Kind::Meridian, {theta0, phi}, {theta1, phi}};
}
Curve Curve::torus_line(Pt p0, Pt p1) { return {Kind::TorusLine, p0, p1}; }

std::string Curve::str() const {
  char buf[128];
  const char* names[] = {"const", "arc", "latitude", "meridian", "line"};
  std::snprintf(buf, sizeof(buf), "%s{(%.6g,%.6g)->(%.6g,%.6g)}",
                names[static_cast<int>(kind)], p0.u, p0.v, p1.u, p1.v);
  return buf;
}

bool Curve::operator==(const Curve& o) const {
  return kind == o.kind && p0.u == o.p0.u && p0.v == o.p0.v && p1.u == o.p1.u &&
         p1.v == o.p1.v;
}

double AnalyticOneForm::coeff_u(const Pt&) const {
  return kind == Kind::Const ? a : 0.0;
}

double AnalyticOneForm::coeff_v(const Pt& p) const {
  switch (kind) {
    case Kind::Zero:
      return 0;
    case Kind::Const:
      return b;
    case Kind::MonopoleNorth:
      return 0.5 * n * (1.0 - std::cos(p.u));
    case Kind::MonopoleSouth:
      return -0.5 * n * (1.0 + std::cos(p.u));
  }
  return 0;
}

AnalyticOneForm AnalyticOneForm::zero() { return {}; }
AnalyticOneForm AnalyticOneForm::constant(double a, double b) {
  AnalyticOneForm f;
  f.kind = Kind::Const;
  f.a = a;
  f.b = b;
  return f;
}
AnalyticOneForm AnalyticOneForm::monopole_north(int n) {
  AnalyticOneForm f;
  f.kind = Kind::MonopoleNorth;
  f.n = n;
  return f;
}
AnalyticOneForm AnalyticOneForm::monopole_south(int n) {
  AnalyticOneForm f;
  f.kind = Kind::MonopoleSouth;
  f.n = n;
  return f;
}

double AnalyticTwoForm::coeff(const Pt& p) const {
  switch (kind) {
    case Kind::Zero:
      return 0;
    case Kind::Const:
      return c;
    case Kind::MonopoleCurvature:
      return 0.5 * n * std::sin(p.u);
  }
  return 0;
}

AnalyticTwoForm AnalyticTwoForm::zero() { return {}; }
AnalyticTwoForm AnalyticTwoForm::constant(double c) {
  AnalyticTwoForm f;
  f.kind = Kind::Const;
  f.c = c;
  return f;
}
AnalyticTwoForm AnalyticTwoForm::monopole(int n) {
  AnalyticTwoForm f;
  f.kind = Kind::MonopoleCurvature;
  f.n = n;
  return f;
}

Phase TransitionFn::eval(const Pt& p) const {
  Phase base;
  switch (kind) {
    case Kind::Const:
      base = constant;
      break;
    case Kind::SphereMonopole:
      base = Phase::radians(n * p.v);
      break;
  }
  if (corruption) {
    double du = p.u - corruption->at.u, dv = p.v - corruption->at.v;
    if (du * du + dv * dv <= corruption->radius * corruption->radius)
      base += corruption->amount;
  }
  return base;
}

TransitionFn TransitionFn::constant_phase(Phase p) {
  TransitionFn t;
  t.kind = Kind::Const;
  t.constant = p;
  return t;
}
TransitionFn TransitionFn::sphere_monopole(int n) {
  TransitionFn t;
  t.kind = Kind::SphereMonopole;
  t.n = n;
  return t;
}

}  // namespace ghol
