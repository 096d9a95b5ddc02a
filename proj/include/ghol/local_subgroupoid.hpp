#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghol/cover.hpp"
#include "ghol/germ.hpp"
#include "ghol/groupoid.hpp"
#include "ghol/site.hpp"
#include "ghol/bundle.hpp"
#include "ghol/thin_path.hpp"

namespace ghol {

// Transport functional on in-chart edge steps: assigns a parent-groupoid
// arrow to each step, compatible with concatenation and reversal.
struct TransportFunctional {
  std::shared_ptr<const FiniteGroupoid> g;
  std::function<int(const Step&)> arrow_of_step;

  int path_arrow(const CellComplex& cx, int start_vertex,
                 const std::vector<Step>& steps) const;
};

// Smallest subgroupoid on the given object set containing the generators.
Subgroupoid generated_on(std::shared_ptr<const FiniteGroupoid> parent,
                         const std::vector<int>& objects,
                         const std::vector<int>& generators);

// Transport-reachability subgroupoid of G restricted to a chart: arrows
// joined to identities by the transport of some in-chart path. Validates
// concatenation/reversal coherence of the input data.
Subgroupoid c_upsilon(const CoveredSpace& space, int chart,
                      const TransportFunctional& transport);

// Per-chart geodesic tables: unique path for each ordered vertex pair.
struct GeodesicStructure {
  // tables[chart][(x, y)] = steps of the geodesic from x to y
  std::vector<std::map<std::pair<int, int>, std::vector<Step>>> tables;
};

// Breadth-first geodesics with lexicographic tie-break on vertex names.
GeodesicStructure bfs_lex_geodesics(const CoveredSpace& space);

struct AtlasPiece {
  int chart = -1;
  std::vector<int> chart_objects;  // groupoid object indices of the chart
  Subgroupoid piece;
};

struct LocalSubgroupoid {
  std::shared_ptr<const FiniteGroupoid> g;
  FiniteSite site;
  std::vector<AtlasPiece> atlas;
  // declared identification opens per chart pair (overlap components)
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens;

  // the section x -> [U_i, C_i]_x using the first atlas chart containing x
  Germ section(int groupoid_object) const;
};

struct BuildReport {
  bool geodesics_unique = true;
  bool overlaps_coherent = true;
  bool flat = true;
  bool path_local = true;
  long long flatness_paths_checked = 0;
  long long path_local_checks = 0;
  std::string first_failure;
};

// Builds the local subgroupoid of a geodesic atlas; verifies the geodesic
// invariants and the path-locality of the cover. Throws
// FlatnessViolation / OverlapIncoherence for hard failures when `strict`.
std::pair<LocalSubgroupoid, BuildReport> build_local_subgroupoid(
    const CoveredSpace& space, const GeodesicStructure& geod,
    const TransportFunctional& transport, int flatness_budget = 6,
    bool strict = true);

// Finite gauge-groupoid model over the complex vertices with cyclic fiber
// of order q: objects are vertex names, arrows carry phases k/q.
std::shared_ptr<const FiniteGroupoid> gauge_model(const CoveredSpace& space,
                                                  int fiber_order);

// Step transports: the bundle's one-step parallel transport (with frame-
// canonical endpoints), or plain endpoints in a pair-groupoid model.
TransportFunctional bundle_step_transport(
    std::shared_ptr<const FiniteGroupoid> model, const LineBundleData& bundle);
TransportFunctional pair_step_transport(
    std::shared_ptr<const FiniteGroupoid> pair_model, const CoveredSpace& space);

// connected components of pairwise chart overlaps (connectivity through
// overlap edges), as groupoid object sets: the default identification
// opens for amalgamation
std::map<std::pair<int, int>, std::vector<std::vector<int>>>
default_overlap_opens(const CoveredSpace& space, const FiniteGroupoid& g);

}  // namespace ghol
