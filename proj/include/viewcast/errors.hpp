#pragma once

#include <stdexcept>
#include <string>

namespace viewcast {

// Invalid or inconsistent user configuration. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or contract-violating input data. CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fit or evaluation that could not complete. CLI maps this to exit code 4.
class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace viewcast
