#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kronctrl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfLoopPresent : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

/// The characteristic polynomial does not split over the rationals.
class IrrationalSpectrum : public Error {
 public:
  using Error::Error;
};

class NeitherFactorDiagonalizable : public Error {
 public:
  using Error::Error;
};

}  // namespace kronctrl
