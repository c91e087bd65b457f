#pragma once

#include <stdexcept>
#include <string>

namespace psiflat {

/// Input lies outside an operation's domain (bad triple, out-of-range index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A checked 64-bit operation would have wrapped, or a degree budget was exceeded.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Polynomial long division left a nonzero remainder.
class InexactDivisionError : public DomainError {
 public:
  InexactDivisionError() : DomainError("inexact division") {}
};

/// An internal identity failed to hold. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psiflat
