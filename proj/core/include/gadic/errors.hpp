#pragma once

#include <stdexcept>
#include <string>

namespace gadic {

// Precondition failures on mathematical inputs (non-residue, non-unit,
// multiple root, ...). The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BaseMismatch : public DomainError {
 public:
  BaseMismatch(unsigned long lhs, unsigned long rhs)
      : DomainError("base mismatch: " + std::to_string(lhs) + " vs " +
                    std::to_string(rhs)) {}
};

class NotAUnit : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed textual input: literals, polynomials. The CLI maps these to
// exit code 64.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gadic
