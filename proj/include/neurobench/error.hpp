#pragma once

#include <stdexcept>
#include <string>

namespace neurobench {

/// Base for every error the library raises. Messages are single-line and
/// name the offending record and field where one exists.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed dataset file or unsupported unit string.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dataset parsed but violates an invariant or dangles a reference.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the physical domain of a model (e.g. V_sa >= V_cc).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation needs a value the record marks as absent.
class IncomputableError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

}  // namespace neurobench
