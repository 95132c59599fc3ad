#pragma once

#include <stdexcept>
#include <string>

namespace semigame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadParamError : public Error {
 public:
  using Error::Error;
};

// Cayley table entry outside 0..n-1.
class NonClosedError : public Error {
 public:
  NonClosedError(int row, int col, long long value, const std::string& msg)
      : Error(msg), row(row), col(col), value(value) {}
  int row, col;
  long long value;
};

// Associativity violation with a witness triple: (x*y)*z != x*(y*z).
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(int x, int y, int z, const std::string& msg)
      : Error(msg), x(x), y(y), z(z) {}
  int x, y, z;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A set with no closed-form counting rule met a stage too large to enumerate.
class PredicateNotCountableError : public CapExceededError {
 public:
  using CapExceededError::CapExceededError;
};

class NoInvariantMeasureError : public Error {
 public:
  using Error::Error;
};

class NotATileError : public Error {
 public:
  using Error::Error;
};

}  // namespace semigame
