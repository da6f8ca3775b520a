#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Operator applied outside its domain (d on top-degree forms, negative powers, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller mixed incompatible objects (grids, degrees, missing caches).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Data violates a representation invariant (e.g. non-Hermitian coefficients).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is inconsistent with the problem (divergence in u0, F outside range of d).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside its admissible set (indices, truncation sizes).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Time integration blew up.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hodge
