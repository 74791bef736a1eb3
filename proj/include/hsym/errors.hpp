#pragma once

#include <stdexcept>
#include <string>

namespace hsym {

// Malformed or out-of-range arguments (bad rank, node, weight length, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request outside the domain where a formula holds,
// e.g. J requested on a non-symmetric G/P.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// J(E,L) is not defined: h0 <= rank, trivial weight, or no sections.
class UndefinedJError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A guarded computation would exceed its configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsym
