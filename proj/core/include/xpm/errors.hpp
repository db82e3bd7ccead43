#pragma once

#include <stdexcept>

namespace xpm {

// Invalid inputs, violated preconditions, malformed configuration.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runtime numerical failures: non-convergent quadrature, unphysical results.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xpm
