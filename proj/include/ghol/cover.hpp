#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghol/analytic.hpp"
#include "ghol/complex.hpp"

namespace ghol {

// Chart membership over a cell complex; each chart is a subcomplex.
struct Chart {
  std::string name;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> faces;

  bool has_vertex(int v) const;
  bool has_edge(int e) const;
  bool has_face(int f) const;
};

struct NerveEntry {
  std::vector<int> charts;  // sorted chart indices, size 1..4
  int num_components = 0;
  bool contractible = false;
};

// A space with a finite cover: either a cell complex with chart
// subcomplexes, or a named analytic manifold with declared chart domains.
class CoveredSpace {
 public:
  enum class Backend { Combinatorial, Analytic };

  static CoveredSpace combinatorial(CellComplex complex,
                                    std::vector<Chart> charts,
                                    bool require_good = false);
  static CoveredSpace analytic(AnalyticSpace space);

  Backend backend() const { return backend_; }
  bool is_combinatorial() const { return backend_ == Backend::Combinatorial; }

  const CellComplex& complex() const;
  const Chart& chart(int i) const;
  const AnalyticSpace& analytic_space() const;

  int num_charts() const;
  const std::string& chart_name(int i) const;
  int chart_index(const std::string& name) const;

  const std::vector<NerveEntry>& nerve() const { return nerve_; }
  bool good() const { return good_; }

  // overlap subcomplex cells for a chart tuple (combinatorial backend)
  std::vector<int> overlap_vertices(const std::vector<int>& charts) const;
  std::vector<int> overlap_edges(const std::vector<int>& charts) const;
  std::vector<int> overlap_faces(const std::vector<int>& charts) const;

 private:
  CoveredSpace() = default;
  void compute_nerve_combinatorial();

  Backend backend_ = Backend::Combinatorial;
  CellComplex complex_;
  std::vector<Chart> charts_;
  std::optional<AnalyticSpace> analytic_;
  std::vector<NerveEntry> nerve_;
  bool good_ = false;
};

// Named combinatorial covers used across scenarios and tests.
CoveredSpace make_circle_two_arcs(int n = 12);       // overlap has 2 components
CoveredSpace make_interval_two_arcs(int n = 9);      // overlap connected
CoveredSpace make_torus_four_charts(int nx = 4, int ny = 4);
CoveredSpace make_octahedron_two_charts();
CoveredSpace make_three_torus_eight_charts(int n = 4);
// torus grid with k charts that each cover the whole complex (rich
// overlaps: every tuple of charts meets everywhere)
CoveredSpace make_torus_full_overlap(int nx, int ny, int k = 4);
// four column-ladder charts on an nx x ny torus grid (nx = 4): chart i
// holds vertex columns {i, i+1}; adjacent ladders overlap in one column
CoveredSpace make_torus_four_ladders(int ny = 4);

}  // namespace ghol
