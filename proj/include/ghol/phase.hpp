#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "ghol/rational.hpp"

namespace ghol {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Default comparison tolerance for floating phases, in radians.
inline constexpr double kPhaseTol = 1e-9;

// An element of U(1), measured in turns (1 turn = 2*pi radians).
// Carries an exact rational representation when it was constructed
// symbolically; arithmetic stays exact as long as every operand is exact.
class Phase {
 public:
  Phase() : exact_(Rat(0)), turns_(0.0) {}

  static Phase turns(const Rat& r) {
    Phase p;
    p.exact_ = r.mod1();
    p.turns_ = p.exact_->to_double();
    return p;
  }
  static Phase turns(double t) {
    Phase p;
    p.exact_.reset();
    p.turns_ = wrap(t);
    return p;
  }
  static Phase radians(double r) { return turns(r / kTwoPi); }
  static Phase zero() { return Phase(); }

  bool is_exact() const { return exact_.has_value(); }
  const Rat& exact_turns() const;
  double turns_value() const { return turns_; }
  double radians_value() const { return turns_ * kTwoPi; }

  Phase operator+(const Phase& o) const {
    if (exact_ && o.exact_) return turns(*exact_ + *o.exact_);
    return turns(turns_ + o.turns_);
  }
  Phase operator-() const {
    if (exact_) return turns(-*exact_);
    return turns(-turns_);
  }
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }

  // Integer multiple (k-fold covers, winding numbers).
  Phase times(long long k) const {
    if (exact_) return turns(*exact_ * Rat(k));
    return turns(turns_ * static_cast<double>(k));
  }

  // Exact equality when both sides are exact, tolerance otherwise.
  friend bool operator==(const Phase& a, const Phase& b) {
    if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
    return circle_dist(a.turns_, b.turns_) * kTwoPi <= kPhaseTol;
  }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }

  bool approx_equal(const Phase& o, double tol_radians) const {
    if (exact_ && o.exact_) return *exact_ == *o.exact_;
    return circle_dist(turns_, o.turns_) * kTwoPi <= tol_radians;
  }

  bool is_zero() const {
    if (exact_) return exact_->is_zero();
    return circle_dist(turns_, 0.0) * kTwoPi <= kPhaseTol;
  }

  // "p/q turns" for exact values, decimal turns otherwise.
  std::string str() const;

  // Strict ordering for use as a map key; exact values order before floats.
  friend bool operator<(const Phase& a, const Phase& b) { return a.key() < b.key(); }

 private:
  static double wrap(double t) {
    double w = std::fmod(t, 1.0);
    if (w < 0) w += 1.0;
    if (w == 1.0) w = 0.0;
    return w;
  }
  static double circle_dist(double a, double b) {
    double d = std::fabs(wrap(a) - wrap(b));
    return d > 0.5 ? 1.0 - d : d;
  }
  std::string key() const;

  std::optional<Rat> exact_;
  double turns_;
};

}  // namespace ghol
