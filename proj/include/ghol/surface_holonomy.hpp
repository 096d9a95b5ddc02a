#pragma once

#include <vector>

#include "ghol/gerbe.hpp"
#include "ghol/two_loop.hpp"

namespace ghol {

// Cech-de Rham evaluation of the surface holonomy exp(i int eps) of a
// closed sheet: face curvings, overlap 1-forms along interior edges, and
// trivialization phases around vertex fans.
Phase sheet_holonomy(const GerbeData& gerbe, const Sheet& sheet,
                     const SurfaceAssignment& asg);

Phase surface_holonomy(const GerbeData& gerbe, const TwoLoop& s,
                       const SurfaceAssignment& asg);

// default assignment (first chart containing each closed cell)
Phase surface_holonomy(const GerbeData& gerbe, const TwoLoop& s);

// all valid (face, vertex) chart assignments of a face set; throws
// BudgetExceeded beyond `cap` combinations
std::vector<SurfaceAssignment> enumerate_assignments(const CoveredSpace& space,
                                                     const std::vector<int>& faces,
                                                     std::size_t cap = 1u << 20);

// fast path for exhaustive sweeps: the sheet combinatorics are built once
std::vector<Phase> sweep_assignments(
    const GerbeData& gerbe, const std::vector<int>& faces,
    const std::vector<SurfaceAssignment>& assignments);

struct TwoHolonomyEntry {
  std::string name;
  Phase value;
};

struct TwoHolonomyReport {
  std::vector<TwoHolonomyEntry> table;
  long long pairs_checked = 0;
  bool homomorphism_ok = true;
  std::string first_failure;
};

// Hol values over a family of 2-loops plus the exhaustive pairwise check
// Hol(s1 * s2) = Hol(s1) Hol(s2) and Hol(s * s^-1) = 1.
TwoHolonomyReport two_holonomy(const GerbeData& gerbe,
                               const std::vector<std::pair<std::string, TwoLoop>>& family);

// Transport along an open homotopy: the cylindrical-groupoid arrow phase.
// Boundary edges read their outside chart from the loops' chart tags.
Phase loop_transport_phase(const GerbeData& gerbe, const Homotopy& h,
                           const SurfaceAssignment& asg);
Phase loop_transport_phase(const GerbeData& gerbe, const Homotopy& h);

}  // namespace ghol
