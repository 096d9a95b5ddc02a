#include "ghol/phase.hpp"

#include <cstdio>

namespace ghol {

const Rat& Phase::exact_turns() const {
  if (!exact_) throw std::logic_error("Phase: no exact representation");
  return *exact_;
}

std::string Phase::str() const {
  if (exact_) return exact_->str() + " turns";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12f turns", turns_);
  return buf;
}

std::string Phase::key() const {
  if (exact_) return "e:" + exact_->str();
  char buf[48];
  std::snprintf(buf, sizeof(buf), "f:%.15f", turns_);
  return buf;
}

}  // namespace ghol
