#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// No m <= m_max satisfies the Rosso condition for the pair (ell, j).
class UndefinedCartanEntry : public Error {
 public:
  UndefinedCartanEntry(int ell, int j, long long m_max)
      : Error("Cartan entry (" + std::to_string(ell + 1) + "," + std::to_string(j + 1) +
              ") undefined: no m <= " + std::to_string(m_max) + " satisfies the Rosso condition"),
        ell_(ell),
        j_(j) {}

  int ell() const noexcept { return ell_; }
  int j() const noexcept { return j_; }

 private:
  int ell_;
  int j_;
};

class OddDegree : public Error {
 public:
  explicit OddDegree(int d)
      : Error("operation requires an even tensor degree, got d=" + std::to_string(d)) {}
};

class ObjectLimitExceeded : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class NonPeriodic : public Error {
 public:
  using Error::Error;
};

class NotAQuiddityCycle : public Error {
 public:
  using Error::Error;
};

/// Enumeration or matrix size beyond the configured bounds.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in exact arithmetic.
class Overflow : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace weyl
