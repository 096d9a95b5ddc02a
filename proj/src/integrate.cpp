#include "ghol/integrate.hpp"

#include <cmath>

#include "ghol/errors.hpp"

namespace ghol {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kNodes8[8] = {
    -0.9602898564975362316835609, -0.7966664774136267395915539,
    -0.5255324099163289858177390, -0.1834346424956498049394761,
    0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr double kWeights8[8] = {
    0.1012285362903762591525314, 0.2223810344533744705443560,
    0.3137066458778872873379622, 0.3626837833783619829651504,
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

double panels_pass(const std::function<double(double)>& f, double a, double b,
                   int panels) {
  double h = (b - a) / panels;
  double total = 0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h, half = 0.5 * h;
    double acc = 0;
    for (int k = 0; k < 8; ++k) acc += kWeights8[k] * f(mid + half * kNodes8[k]);
    total += acc * half;
  }
  return total;
}

}  // namespace

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    const QuadratureConfig& cfg) {
  if (a == b) return 0.0;
  int panels = cfg.initial_panels;
  double prev = panels_pass(f, a, b, panels);
  for (int it = 0; it < cfg.max_doublings; ++it) {
    panels *= 2;
    double cur = panels_pass(f, a, b, panels);
    if (std::fabs(cur - prev) < cfg.abs_tol) return cur;
    prev = cur;
  }
  return prev;
}

double gl_integrate_2d(const std::function<double(double, double)>& f,
                       double a0, double b0, double a1, double b1,
                       const QuadratureConfig& cfg) {
  // double both directions together
  int panels = cfg.initial_panels;
  auto full = [&](int p) {
    return panels_pass(
        [&](double u) {
          return panels_pass([&](double v) { return f(u, v); }, a1, b1, p);
        },
        a0, b0, p);
  };
  double prev = full(panels);
  for (int it = 0; it < cfg.max_doublings; ++it) {
    panels *= 2;
    double cur = full(panels);
    if (std::fabs(cur - prev) < cfg.abs_tol) return cur;
    prev = cur;
  }
  return prev;
}

double line_integral(const AnalyticOneForm& form, const Curve& curve, double t0,
                     double t1, const QuadratureConfig& cfg) {
  auto integrand = [&](double t) {
    Pt p = curve.at(t);
    Pt vel = curve.velocity(t);
    return form.coeff_u(p) * vel.u + form.coeff_v(p) * vel.v;
  };
  return gl_integrate(integrand, t0, t1, cfg);
}

double surface_integral(const AnalyticTwoForm& form, Pt lo, Pt hi,
                        const QuadratureConfig& cfg) {
  return gl_integrate_2d([&](double u, double v) { return form.coeff({u, v}); },
                         lo.u, hi.u, lo.v, hi.v, cfg);
}

Rat exact_line_integral(const DiscreteForm& form, const std::vector<int>& sides) {
  if (form.degree != 1) throw Error("exact_line_integral needs a 1-form");
  Rat total(0);
  for (int side : sides) total += form.along(side);
  return total;
}

Rat exact_surface_integral(const DiscreteForm& form,
                           const std::vector<std::pair<int, int>>& faces) {
  if (form.degree != 2) throw Error("exact_surface_integral needs a 2-form");
  Rat total(0);
  for (auto [f, orient] : faces)
    total += orient >= 0 ? form.at(f) : -form.at(f);
  return total;
}

std::string IntegrationProvider::describe() const {
  if (method == Method::ExactSum) return "exact-sum";
  return "composite Gauss-Legendre, " + std::to_string(quad.initial_panels) +
         " panels x " + std::to_string(quad.nodes) + " nodes, doubling to " +
         std::to_string(quad.abs_tol);
}

}  // namespace ghol
