#pragma once

#include <stdexcept>
#include <string>

namespace walgebra {

/// Bad user input: malformed files, invalid root data, non-nilpotent e.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical guarantee failed to hold (e.g. the lifting system was
/// unsolvable). Always indicates a bug rather than bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walgebra
