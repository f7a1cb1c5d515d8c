#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A reconstructed Hodge row came out asymmetric or negative. Always an
/// upstream bug in the Euler-characteristic bookkeeping.
class InconsistentChi : public Error {
 public:
  using Error::Error;
};

class IndexOutOfI : public Error {
 public:
  using Error::Error;
};

class MalformedRecipe : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hodge
