#pragma once

#include <stdexcept>
#include <string>

namespace tightframe {

// Input violates a precondition (not a frame, wrong shape, outside subspace).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical kernel failed or an internal cross-check breached tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tightframe
