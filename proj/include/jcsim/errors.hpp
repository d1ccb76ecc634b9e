#pragma once

#include <stdexcept>

namespace jcsim {

// Bad user input or configuration; the CLI maps this to exit code 2.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Solver or eigensolver breakdown; the CLI maps this to exit code 3.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jcsim
