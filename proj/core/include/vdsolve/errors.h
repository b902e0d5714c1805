#ifndef VDSOLVE_ERRORS_H_
#define VDSOLVE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vds {

// Argument outside the unit interval, or outside a function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown message name and similar failed lookups.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A value failed validation while being built (bad breakpoints, overlapping
// partition cells, uncovered types, ...).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on input that violates its documented contract.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed external input (JSON, rational literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a declared size bound (e.g. brute-force search limits).
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace vds

#endif  // VDSOLVE_ERRORS_H_
