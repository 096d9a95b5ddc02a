#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ghol/cover.hpp"
#include "ghol/thin_path.hpp"

namespace ghol {

// Closed oriented subsurface of the complex: a set of faces (each once)
// whose boundary cancels, evaluated with a global +/-1 orientation.
struct Sheet {
  std::vector<int> faces;
  int orient = 1;
};

// 2-parameter probe: a formal sum of closed sheets. Concatenation of
// 2-loops is sheet-list concatenation; inverses reverse orientation.
class TwoLoop {
 public:
  static TwoLoop closed(std::shared_ptr<const CoveredSpace> space,
                        std::vector<Sheet> sheets);

  const CoveredSpace& space() const { return *space_; }
  std::shared_ptr<const CoveredSpace> space_ptr() const { return space_; }
  const std::vector<Sheet>& sheets() const { return sheets_; }

  friend TwoLoop concat(const TwoLoop& a, const TwoLoop& b);
  friend TwoLoop reverse(const TwoLoop& s);

 private:
  std::shared_ptr<const CoveredSpace> space_;
  std::vector<Sheet> sheets_;
};

// One homotopy layer: a face set whose boundary equals chain(from) -
// chain(to); orient = -1 evaluates the cell reversed (loops swapped).
struct HomotopyCell {
  std::vector<int> faces;
  int orient = 1;
  ThinPath from;
  ThinPath to;
};

// Homotopy between based loops as a stack of cells; stacking homotopies
// concatenates cell lists, which keeps composites representable even when
// they would reuse faces.
struct Homotopy {
  std::shared_ptr<const CoveredSpace> space;
  std::vector<HomotopyCell> cells;

  const ThinPath& from() const;
  const ThinPath& to() const;

  static Homotopy between(std::shared_ptr<const CoveredSpace> space,
                          std::vector<int> faces, ThinPath from, ThinPath to);
  static Homotopy identity(std::shared_ptr<const CoveredSpace> space,
                           ThinPath loop);

  friend Homotopy stack(const Homotopy& a, const Homotopy& b);
  friend Homotopy reverse(const Homotopy& h);

  // reduced cell word (adjacent cell/reverse pairs cancelled)
  std::string word_key() const;
};

// Chart labels over a sheet: faces and reference charts at vertices.
// Edge chart pairs are derived from the adjacent faces.
struct SurfaceAssignment {
  std::map<int, int> face_chart;
  std::map<int, int> vertex_chart;

  static SurfaceAssignment canonical(const CoveredSpace& space,
                                     const std::vector<int>& faces);
};

}  // namespace ghol
