#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ghol/analytic.hpp"
#include "ghol/cover.hpp"
#include "ghol/forms.hpp"
#include "ghol/integrate.hpp"

namespace ghol {

struct ValidationIssue {
  std::string where;
  std::string what;
};

struct ValidationReport {
  bool pass = true;
  int checks = 0;
  std::vector<ValidationIssue> issues;

  void fail(std::string where, std::string what) {
    pass = false;
    issues.push_back({std::move(where), std::move(what)});
  }
};

// U(1) principal bundle presented by local data on a covered space:
// transition phases g_ij on overlaps and connection 1-forms A_i per chart.
struct LineBundleData {
  std::shared_ptr<const CoveredSpace> space;

  // combinatorial backend: g per overlap vertex, A per chart as 1-form
  std::map<std::array<int, 2>, std::map<int, Phase>> g;  // key sorted i<j
  std::map<int, DiscreteForm> conn;                      // chart -> degree-1

  // analytic backend: transitions per overlap (by component), named forms
  std::map<std::array<int, 2>, std::vector<TransitionFn>> g_an;
  std::map<int, AnalyticOneForm> conn_an;
  std::map<int, AnalyticTwoForm> curv_an;  // declared curvature (for flux)

  QuadratureConfig quad;

  // antisymmetric accessors
  Phase g_vertex(int i, int j, int vertex) const;
  Phase g_point(int i, int j, const Pt& p) const;
  const DiscreteForm& conn_form(int chart) const;
  const AnalyticOneForm& conn_analytic(int chart) const;

  static LineBundleData trivial(std::shared_ptr<const CoveredSpace> space);
  // exact monopole data on the octahedron two-chart cover
  static LineBundleData monopole_octahedron(int n);
  // analytic monopole on sphere-2-charts
  static LineBundleData monopole_sphere(int n);
  // flat combinatorial bundle on a torus grid cover with given fluxes
  // through the two coordinate cycles
  static LineBundleData flat_torus(std::shared_ptr<const CoveredSpace> space,
                                   const Rat& flux_x, const Rat& flux_y);
};

// Checks cocycle, antisymmetry, and A_i - A_j = dlog g_ij (exact per edge
// on the combinatorial backend; sampled within tol on analytic overlaps).
ValidationReport validate_bundle(const LineBundleData& bundle,
                                 double tol = kPhaseTol);

// Total curvature over all faces (combinatorial) or chart caps (analytic
// sphere), in radians; the analytic value comes from 2d quadrature.
double total_curvature_radians(const LineBundleData& bundle);

}  // namespace ghol
