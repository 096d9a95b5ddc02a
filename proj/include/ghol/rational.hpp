#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghol {

// Exact rational arithmetic for combinatorial form values and phases.
// Values are kept reduced with positive denominator; intermediates go
// through __int128 so desk-scale scenarios never overflow silently.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rat parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }

  // Floor division remainder into [0, 1).
  Rat mod1() const {
    long long q = num_ / den_;
    long long r = num_ % den_;
    if (r < 0) r += den_;
    (void)q;
    return Rat(r, den_, already_reduced{});
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

 private:
  struct already_reduced {};
  constexpr Rat(long long n, long long d, already_reduced) : num_(n), den_(d) {}

  static Rat from128(__int128 n, __int128 d);
  void normalize();

  long long num_;
  long long den_;
};

}  // namespace ghol
