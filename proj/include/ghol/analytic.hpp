#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghol/phase.hpp"

namespace ghol {

// Point in chart coordinates. Circle: u = angle; sphere: (u,v) = (theta,
// phi); torus: (u,v) in [0,1)^2 lattice coordinates.
struct Pt {
  double u = 0;
  double v = 0;
};

struct Curve;

struct DeclaredNerveEntry {
  std::vector<int> charts;
  int num_components = 0;
  bool contractible = false;
};

// Named analytic manifolds with fixed chart domains. Goodness is asserted
// per builtin, not verified.
class AnalyticSpace {
 public:
  enum class Kind { Circle2, Sphere2, Torus4 };

  static AnalyticSpace circle_two_charts();
  static AnalyticSpace sphere_two_charts();
  static AnalyticSpace torus_four_charts();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int num_charts() const { return static_cast<int>(chart_names_.size()); }
  const std::string& chart_name(int i) const { return chart_names_[i]; }
  int chart_index(const std::string& name) const;

  bool contains(int chart, const Pt& p) const;
  const std::vector<DeclaredNerveEntry>& declared_nerve() const { return nerve_; }
  bool declared_good() const { return good_; }

  // deterministic sample points on a pairwise overlap, for validation
  std::vector<Pt> overlap_samples(int chart_a, int chart_b, int count) const;

  // short curves inside the overlap, used to test A_i - A_j = dlog g_ij
  std::vector<Curve> overlap_check_segments(int chart_a, int chart_b) const;

  // index of the overlap component containing p (for per-component
  // transition functions)
  int overlap_component(int chart_a, int chart_b, const Pt& p) const;

  // equality up to coordinate wrapping (and pole degeneracy on the sphere)
  bool same_point(const Pt& a, const Pt& b, double tol = 1e-9) const;

  // wrapped representative used for stable point labels
  Pt canonical_point(const Pt& p) const;

 private:
  Kind kind_ = Kind::Circle2;
  std::string name_;
  std::vector<std::string> chart_names_;
  std::vector<DeclaredNerveEntry> nerve_;
  bool good_ = false;
};

// Parametric curve with analytic velocity; domain t in [0,1].
struct Curve {
  enum class Kind { Constant, CircleArc, Latitude, Meridian, TorusLine };
  Kind kind = Kind::Constant;
  // CircleArc: u: p0.u -> p1.u. Latitude: u = p0.u fixed, v: p0.v -> p1.v.
  // Meridian: v = p0.v fixed, u: p0.u -> p1.u. TorusLine: p0 -> p1 affine
  // (endpoints may be unwrapped to encode winding).
  Pt p0, p1;

  Pt at(double t) const;
  Pt velocity(double t) const;
  Curve reversed() const;
  // restriction to [a,b] re-parametrized onto [0,1]
  Curve sub(double a, double b) const;

  static Curve constant(Pt p);
  static Curve circle_arc(double u0, double u1);
  static Curve latitude(double theta, double phi0, double phi1);
  static Curve meridian(double phi, double theta0, double theta1);
  static Curve torus_line(Pt p0, Pt p1);

  std::string str() const;
  bool operator==(const Curve& o) const;
};

// 1-form on a chart, (A_u, A_v) coefficient functions.
struct AnalyticOneForm {
  enum class Kind { Zero, Const, MonopoleNorth, MonopoleSouth };
  Kind kind = Kind::Zero;
  double a = 0, b = 0;  // Const: a du + b dv
  int n = 0;            // monopole charge

  double coeff_u(const Pt& p) const;
  double coeff_v(const Pt& p) const;

  static AnalyticOneForm zero();
  static AnalyticOneForm constant(double a, double b);
  static AnalyticOneForm monopole_north(int n);
  static AnalyticOneForm monopole_south(int n);
};

// 2-form on a chart, coefficient of du^dv.
struct AnalyticTwoForm {
  enum class Kind { Zero, Const, MonopoleCurvature };
  Kind kind = Kind::Zero;
  double c = 0;
  int n = 0;

  double coeff(const Pt& p) const;

  static AnalyticTwoForm zero();
  static AnalyticTwoForm constant(double c);
  static AnalyticTwoForm monopole(int n);
};

// Phase-valued transition function on an overlap, with optional localized
// corruption for fault-injection scenarios.
struct TransitionFn {
  enum class Kind { Const, SphereMonopole };
  Kind kind = Kind::Const;
  Phase constant;
  int n = 0;

  struct Corruption {
    Pt at;
    double radius = 0;
    Phase amount;
  };
  std::optional<Corruption> corruption;

  Phase eval(const Pt& p) const;

  static TransitionFn constant_phase(Phase p);
  static TransitionFn sphere_monopole(int n);
};

}  // namespace ghol
