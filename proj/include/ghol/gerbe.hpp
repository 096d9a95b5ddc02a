#pragma once

#include <array>
#include <map>
#include <memory>

#include "ghol/bundle.hpp"
#include "ghol/cover.hpp"
#include "ghol/forms.hpp"

namespace ghol {

// Abelian gerbe with connective structure and curving, as Deligne cochain
// tables on a combinatorial covered space: trivialization phases theta on
// triple overlaps, 1-forms A_ij on double overlaps, curvings F_i per chart.
struct GerbeData {
  std::shared_ptr<const CoveredSpace> space;

  std::map<std::array<int, 3>, std::map<int, Phase>> theta;  // key sorted
  std::map<std::array<int, 2>, DiscreteForm> a;              // key sorted, deg 1
  std::map<int, DiscreteForm> f;                             // chart -> deg 2

  // fully antisymmetric accessors
  Phase theta_vertex(int i, int j, int k, int vertex) const;
  Rat a_along(int i, int j, int side) const;
  Rat f_at(int chart, int face) const;

  static GerbeData trivial(std::shared_ptr<const CoveredSpace> space);
  // flat B-field gerbe on a torus grid cover: theta = 1, A = 0, F_i a
  // global 2-form with total flux phi (spread evenly over the faces)
  static GerbeData flat_torus(std::shared_ptr<const CoveredSpace> space,
                              const Rat& flux);
};

// Checks theta-cocycle (quadruple overlaps), antisymmetry housekeeping,
// the A relation on triple overlaps, and F_i - F_j = dA_ij.
ValidationReport validate_gerbe(const GerbeData& gerbe, double tol = kPhaseTol);

// Deligne 1-cochain: lifted (rational-turn valued) functions h_ij on
// overlap vertices and 1-forms chi_i per chart. Acting on gerbe data:
//   theta' = theta - (h_ij + h_jk + h_ki),  A' = A + dh + (chi_i - chi_j),
//   F' = F + d chi.
// The lift keeps d(dh) = 0 exact, so validity is preserved bit-exactly.
struct DeligneCochain {
  std::map<std::array<int, 2>, std::map<int, Rat>> h;  // key sorted
  std::map<int, DiscreteForm> chi;                     // chart -> deg 1

  Rat h_vertex(int i, int j, int vertex) const;
};

GerbeData apply_coboundary(const GerbeData& gerbe, const DeligneCochain& c);

// The bundle-level analog: A_i' = A_i + d chi_i, g_ij' = g_ij + (chi_i -
// chi_j) for lifted 0-forms chi on chart vertices.
LineBundleData apply_gauge(const LineBundleData& bundle,
                           const std::map<int, std::map<int, Rat>>& chi);

}  // namespace ghol
