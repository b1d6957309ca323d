#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chipdual {

// Raised for malformed or out-of-domain arguments (non-square input, bad
// index, a vector outside S+ / R+ where membership is required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a matrix that must be invertible is singular.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an enumeration would exceed its configured size limit.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Raised when an internal consistency check or a structural assertion
// does not hold. The message carries the offending values.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

}  // namespace chipdual
