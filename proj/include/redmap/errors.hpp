// errors.hpp
// Exception types thrown across the library. All derive from std::exception
// via the standard categories so callers can catch broadly or precisely.

#pragma once

#include <stdexcept>
#include <string>

namespace redmap {

// Matrix side length does not match the declared subsystem dimensions.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Subsystem index out of range, duplicated, or an empty set where one is required.
struct SubsystemError : std::invalid_argument {
  explicit SubsystemError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Operator fails the hermiticity tolerance where a Hermitian input is required.
struct HermiticityError : std::runtime_error {
  explicit HermiticityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested object exceeds the configured dimension cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation requires an odd number of parties.
struct ParityError : std::invalid_argument {
  explicit ParityError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A required marginal (or other input block) is missing.
struct IncompleteInputError : std::invalid_argument {
  explicit IncompleteInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Parameters outside the validity region of a state family.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed text input (state files, marginal streams).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace redmap
