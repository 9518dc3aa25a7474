#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amkit {

/// Violated precondition: wrong dimensions, non-Hermitian generator,
/// non-unitary gate, non-invertible parameter.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured dense-size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The requested construction exists only for other dimensions or levels.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed HGS or optical-sequence text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Decoding found population outside the single-photon-per-subsystem sector.
class LeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace amkit
