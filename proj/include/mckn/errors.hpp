#ifndef MCKN_ERRORS_HPP
#define MCKN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mckn {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

class NonCoprimeExponent : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The group order exceeds the element-enumeration cap.
class TooLargeForEnumeration : public Error {
 public:
  using Error::Error;
};

/// A map given by generator images is not a well-defined homomorphism,
/// or not bijective where an automorphism was requested.
class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class NoAdmissiblePrime : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of a character table.
class TableInconsistency : public Error {
 public:
  using Error::Error;
};

/// A torus character has no extension to its inertia group.
class ObstructionError : public Error {
 public:
  using Error::Error;
};

/// A root of unity required by a torus-normalizer model does not exist mod d.
class NumberTheoreticInconsistency : public Error {
 public:
  using Error::Error;
};

class UnsupportedAction : public Error {
 public:
  using Error::Error;
};

class UnknownTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace mckn

#endif  // MCKN_ERRORS_HPP
