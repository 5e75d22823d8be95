#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

/// Malformed input: bad file contents, out-of-range ids, wrong uniformity.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The hypergraph is not dense enough for the family it was paired with.
class DensityViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive computation was refused because it exceeds the configured limit.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A proved guarantee failed to hold. Always a bug or a falsified claim.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hgc
