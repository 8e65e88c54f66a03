#pragma once

#include <stdexcept>
#include <string>

namespace ncgeom {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed request: unknown command, unparsable rational, bad group spec.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: a Cayley table that violates a group axiom, an unknown
/// element label, a badly shaped file.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold for otherwise well-formed input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonCyclicClassError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMetricError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMatrixError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IncompleteSpectrumError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncgeom
