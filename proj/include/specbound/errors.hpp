#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specbound {

/// Malformed graph6 input. `offset` is the zero-based byte position of the
/// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Invalid parameters (generator ranges, tolerances, sizes).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative kernel failed to converge.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A function was called on input outside its mathematical hypothesis
/// (e.g. a matrix that should be PSD has a negative eigenvalue).
class ContractError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace specbound
