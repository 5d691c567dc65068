#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

// Library errors carry a stable category name so callers and tests can match
// on the failure class without parsing free-form messages.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(category + ": " + what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

#define RMT_DEFINE_ERROR(NAME)                                       \
  class NAME : public Error {                                        \
   public:                                                           \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}   \
  }

RMT_DEFINE_ERROR(NotHermitian);          // eigensolver input fails the symmetry check
RMT_DEFINE_ERROR(PairingFailure);        // doubled spectrum does not split into close pairs
RMT_DEFINE_ERROR(DimensionMismatch);     // incompatible operands (product factors, grids)
RMT_DEFINE_ERROR(UnrealizableParameters);// no truncation size matches and MCMC is disabled
RMT_DEFINE_ERROR(ChainDiverged);         // MCMC log-density became NaN/inf
RMT_DEFINE_ERROR(UnsupportedMassCount);  // analytic reduction only available for one mass
RMT_DEFINE_ERROR(PoleOnContour);         // contour radius collides with a pole/branch point
RMT_DEFINE_ERROR(CoincidentMasses);      // two-mass kernel needs distinct masses
RMT_DEFINE_ERROR(DegenerateGrid);        // reference values too close to zero for a ratio
RMT_DEFINE_ERROR(NonConvergent);         // infinite series failed to converge under the cap
RMT_DEFINE_ERROR(ConfigError);           // invalid parameters / configuration input

#undef RMT_DEFINE_ERROR

}  // namespace rmt
