#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ghol/analytic.hpp"
#include "ghol/forms.hpp"

namespace ghol {

// Composite Gauss-Legendre with panel doubling until successive estimates
// agree to abs_tol. Summation order is fixed, so results are bitwise
// deterministic for a fixed schedule.
struct QuadratureConfig {
  int nodes = 8;
  int initial_panels = 16;
  double abs_tol = 1e-10;
  int max_doublings = 8;
};

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    const QuadratureConfig& cfg = {});

double gl_integrate_2d(const std::function<double(double, double)>& f,
                       double a0, double b0, double a1, double b1,
                       const QuadratureConfig& cfg = {});

// Line integral of a chart 1-form along a curve restricted to [t0, t1].
double line_integral(const AnalyticOneForm& form, const Curve& curve,
                     double t0 = 0.0, double t1 = 1.0,
                     const QuadratureConfig& cfg = {});

// Surface integral of a chart 2-form over a coordinate rectangle.
double surface_integral(const AnalyticTwoForm& form, Pt lo, Pt hi,
                        const QuadratureConfig& cfg = {});

// Exact providers for the combinatorial backend.
Rat exact_line_integral(const DiscreteForm& form, const std::vector<int>& sides);
Rat exact_surface_integral(const DiscreteForm& form,
                           const std::vector<std::pair<int, int>>& faces);

// Method descriptor for reports.
struct IntegrationProvider {
  enum class Method { ExactSum, GaussLegendre };
  Method method = Method::ExactSum;
  QuadratureConfig quad;
  std::string describe() const;
};

}  // namespace ghol
