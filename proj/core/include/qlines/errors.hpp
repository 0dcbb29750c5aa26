#pragma once

#include <stdexcept>
#include <string>

namespace qlines {

// Parameter outside the supported range (n > 8, k > n, zero degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two classes from different lattices were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A class handed to a (-1)-curve operation fails C^2 = C.K = -1.
class InvalidCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed incidence model or unknown point id.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checked integer arithmetic left the range of std::int64_t.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace qlines
