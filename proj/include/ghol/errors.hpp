#pragma once

#include <stdexcept>
#include <string>

namespace ghol {

// Error taxonomy shared across the library. Each condition gets its own
// type so callers (and the CLI) can map failures to scenario locations.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GHOL_DEFINE_ERROR(NAME)                                   \
  struct NAME : Error {                                           \
    explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
  }

GHOL_DEFINE_ERROR(NonComposable);
GHOL_DEFINE_ERROR(UnknownObject);
GHOL_DEFINE_ERROR(NotWide);
GHOL_DEFINE_ERROR(PointOutside);
GHOL_DEFINE_ERROR(InvalidCrossedModule);
GHOL_DEFINE_ERROR(NotEdgeSymmetric);
GHOL_DEFINE_ERROR(EndpointMismatch);
GHOL_DEFINE_ERROR(NonMonotone);
GHOL_DEFINE_ERROR(KindMismatch);
GHOL_DEFINE_ERROR(BadNerve);
GHOL_DEFINE_ERROR(NotGood);
GHOL_DEFINE_ERROR(DegreeOverflow);
GHOL_DEFINE_ERROR(ChartMismatch);
GHOL_DEFINE_ERROR(InvalidBundle);
GHOL_DEFINE_ERROR(NotClosed);
GHOL_DEFINE_ERROR(BudgetExceeded);
GHOL_DEFINE_ERROR(InvalidAssignment);
GHOL_DEFINE_ERROR(InvalidGerbe);
GHOL_DEFINE_ERROR(InconsistentTransport);
GHOL_DEFINE_ERROR(FlatnessViolation);
GHOL_DEFINE_ERROR(OverlapIncoherence);
GHOL_DEFINE_ERROR(NonConfluentRules);
GHOL_DEFINE_ERROR(SchemaError);
GHOL_DEFINE_ERROR(UnknownVerb);

#undef GHOL_DEFINE_ERROR

}  // namespace ghol
