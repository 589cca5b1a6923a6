#pragma once

#include <stdexcept>
#include <string>

namespace mber {

// An argument lies outside the domain of an operation (bad dimension, rank,
// coordinate, seed request, ...). Maps to CLI exit code 3.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A probability table, parameter lattice or model description violates its
// constraints (negative mass, bad sum, wrong length, ...). Exit code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A set of dependence parameters admits no joint distribution, or a requested
// interval is empty. A special case of validation failure.
class IncompatibilityError : public ValidationError {
 public:
  explicit IncompatibilityError(const std::string& what) : ValidationError(what) {}
};

// File access or file syntax problems. Exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mber
