#pragma once

#include <stdexcept>
#include <string>

namespace incline {

// Caller passed something the operation does not accept (carrier mismatch,
// malformed input, wrong algebra kind for the requested operation).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs are well-formed but violate a mathematical precondition
// (e.g. residual(x, y) with x not below y, decomposing a non-CP matrix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured cap (factorial size, search budget, carrier size) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something its own invariants reject. Seeing one
// of these means an algebra is flagged with properties it does not have.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace incline
