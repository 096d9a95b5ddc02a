#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghol/analytic.hpp"
#include "ghol/cover.hpp"

namespace ghol {

// One combinatorial step: a signed side of the complex plus the chart the
// step is routed through.
struct Step {
  int side = 0;   // >=0 forward edge, ~e reversed
  int chart = 0;
};

// Monotone smooth reparametrization of [0,1] onto itself.
struct Reparam {
  enum class Kind { Identity, Square, Cubic, Smoothstep, Wiggle };
  Kind kind = Kind::Identity;

  double at(double t) const;
  double deriv(double t) const;
  bool monotone() const;  // sampled derivative check
  static Reparam named(const std::string& name);
  std::string str() const;
};

struct SmoothSegment {
  int chart = 0;
  Curve curve;
  Reparam reparam;  // applied within the segment

  Pt at(double t) const { return curve.at(reparam.at(t)); }
  Pt velocity(double t) const;
};

// Chart-tagged piecewise path, stored in thin normal form for the
// combinatorial kind (adjacent edge/reverse pairs cancelled).
class ThinPath {
 public:
  enum class Kind { Combinatorial, Smooth };

  static ThinPath combinatorial(std::shared_ptr<const CoveredSpace> space,
                                int start_vertex, std::vector<Step> steps);
  static ThinPath smooth(std::shared_ptr<const CoveredSpace> space,
                         std::vector<SmoothSegment> segments,
                         double sitting_eps = 1.0 / 16);

  Kind kind() const { return kind_; }
  const CoveredSpace& space() const { return *space_; }
  std::shared_ptr<const CoveredSpace> space_ptr() const { return space_; }

  // combinatorial accessors
  int start_vertex() const;
  int end_vertex() const;
  const std::vector<Step>& steps() const;

  // smooth accessors
  const std::vector<SmoothSegment>& segments() const;
  double sitting_eps() const { return sitting_eps_; }
  Pt smooth_start() const;
  Pt smooth_end() const;

  bool is_loop() const;
  bool is_constant() const;

  // endpoint names for groupoid object labels
  std::string source_label() const;
  std::string target_label() const;

  // thin normal form key; combinatorial: edge word, smooth: segment word
  std::string normal_form_key() const;

  friend ThinPath concat(const ThinPath& a, const ThinPath& b);
  friend ThinPath reverse(const ThinPath& p);
  friend ThinPath reparametrize(const ThinPath& p, const Reparam& psi);

  // decidable for combinatorial kind; KindMismatch for smooth
  friend bool thin_equal(const ThinPath& a, const ThinPath& b);

 private:
  ThinPath() = default;

  Kind kind_ = Kind::Combinatorial;
  std::shared_ptr<const CoveredSpace> space_;
  int start_vertex_ = -1;
  std::vector<Step> steps_;
  std::vector<SmoothSegment> segments_;
  double sitting_eps_ = 1.0 / 16;
};

// Cancel adjacent reversed edges (chart tags do not block cancellation).
std::vector<Step> normalize_steps(std::vector<Step> steps);

}  // namespace ghol
