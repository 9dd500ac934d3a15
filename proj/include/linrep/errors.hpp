#pragma once

#include <stdexcept>
#include <string>

namespace linrep {

// Enumeration or budget guard exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad configuration (file or programmatic), detected before any computation.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; the message carries the position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linrep
