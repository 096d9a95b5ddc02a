#include "ghol/rational.hpp"

#include <cstdlib>

namespace ghol {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rat Rat::from128(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  const __int128 lim = static_cast<__int128>(INT64_MAX);
  if (n > lim || n < -lim || d > lim)
    throw std::overflow_error("Rat: value exceeds 64-bit range");
  Rat r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

void Rat::normalize() { *this = from128(num_, den_); }

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    long long n = std::stoll(text.substr(0, slash));
    long long d = std::stoll(text.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Rat: cannot parse '" + text + "'");
  }
}

}  // namespace ghol
