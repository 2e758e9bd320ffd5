#pragma once

#include <stdexcept>
#include <string>

namespace pvqe {

/// Bad input: malformed config, out-of-domain argument, missing fixture.
/// The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed (SCF divergence, singular matrix, bad fit).
/// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pvqe
