#pragma once

#include <vector>

#include "ghol/double_groupoid.hpp"
#include "ghol/surface_holonomy.hpp"
#include "ghol/two_loop.hpp"

namespace ghol {

// Loop-space structures determined by gerbe data on a curated family of
// based loops and homotopies: the cylindrical arrows (reduced homotopy
// words with their transport phases), the thin cylindrical groupoid
// obtained by identifying arrows with equal endpooints and phase, and the
// double groupoid of transported lifts with its connection pair.
struct CylindricalArrow {
  std::string word;
  std::string from;
  std::string to;
  Phase phase;
};

struct LoopSpaceResult {
  std::vector<CylindricalArrow> cylinder_arrows;  // pre-quotient words
  AssembledConnection assembled;                  // thin quotient + DG + CP
  bool quotient_morphism_ok = true;
  long long pairs_checked = 0;
  std::string first_failure;
};

LoopSpaceResult loop_space_groupoids(const GerbeData& gerbe,
                                     const std::vector<Homotopy>& generators,
                                     std::size_t budget = 2048);

}  // namespace ghol
