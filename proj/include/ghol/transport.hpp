#pragma once

#include <string>
#include <vector>

#include "ghol/bundle.hpp"
#include "ghol/double_groupoid.hpp"
#include "ghol/thin_path.hpp"

namespace ghol {

// Parallel transport of a thin path: sum of segment integrals of the chart
// connections plus transition phases at chart switches. Values are frame-
// canonical: endpoints are referred to the lowest-index chart containing
// them, which makes transport strictly additive under concatenation.
struct TransportResult {
  Phase value;
  struct Piece {
    std::string what;
    Phase amount;
  };
  std::vector<Piece> breakdown;
};

TransportResult transport(const LineBundleData& bundle, const ThinPath& path);

// Holonomy of a closed loop; throws NotClosed.
Phase holonomy(const LineBundleData& bundle, const ThinPath& loop);

// Transport of the prefix [0, t] in the path's uniform step/segment
// parametrization (the evaluated lift at time t).
Phase partial_transport(const LineBundleData& bundle, const ThinPath& path,
                        double t);

// Raw combinatorial evaluator over a step list (no normalization); used to
// exercise thin-invariance against the normalized path.
Phase transport_steps_raw(const LineBundleData& bundle, int start_vertex,
                          const std::vector<Step>& steps);

// The double groupoid of transported path lifts over a finite thin-path
// family, with its connection pair. The family is closed under
// concatenation and reversal up to `budget` distinct arrows; identifying
// paths by transport class keeps loop families finite.
enum class PathClassMode { ThinClasses, TransportClasses };

struct ThinPathDouble {
  DoubleGroupoid dg;
  ConnectionPair cp;
  // V arrow index -> a representative path of that class
  std::vector<ThinPath> representatives;
};

ThinPathDouble thin_path_double_groupoid(const LineBundleData& bundle,
                                         const std::vector<ThinPath>& generators,
                                         PathClassMode mode,
                                         std::size_t budget = 4096);

}  // namespace ghol
