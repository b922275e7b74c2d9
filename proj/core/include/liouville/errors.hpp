#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// A computation produced a NaN or infinity where a finite value is required.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects that must share a grid do not.
class GridMismatch : public std::invalid_argument {
 public:
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace liouville
