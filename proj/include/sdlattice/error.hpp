#pragma once

#include <stdexcept>

namespace sdlattice {

// Input violates an operation's preconditions (malformed data, wrong shape,
// out-of-range parameter).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request without an answer: a family that is not tight at the
// requested level, a dominator that fails to dominate, an escaped bound.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sdlattice
