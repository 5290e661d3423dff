#pragma once

#include <stdexcept>
#include <string>

namespace oamsim {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Adaptive truncation hit the hard cap before the tail bound was met.
struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Probability mass escaping the truncated Fock lattice exceeded the budget.
struct LeakageExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every sample in an optimization grid was unusable.
struct SearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A curve metric (visibility, FWHM, ...) is undefined for the given data.
struct MetricUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sweep specification failed validation; `field` names the offender.
struct InvalidSpec : std::invalid_argument {
  InvalidSpec(std::string field_, const std::string& what_)
      : std::invalid_argument(what_), field(std::move(field_)) {}
  std::string field;
};

}  // namespace oamsim
