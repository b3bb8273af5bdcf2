#pragma once

#include <stdexcept>
#include <string>

namespace hylab {

/// Raised when an argument violates a documented precondition
/// (bad group factors, p out of range, non-positive weights, ...).
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace hylab
