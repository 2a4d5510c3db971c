#pragma once

#include <stdexcept>
#include <string>

namespace hopfq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedFieldsError : Error {
  MixedFieldsError(const std::string& lhs, const std::string& rhs)
      : Error("mixed fields: " + lhs + " vs " + rhs) {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("inverse of zero") {}
};

struct ShapeMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NonCanonicalScalarError : ParseError {
  explicit NonCanonicalScalarError(const std::string& text)
      : ParseError("non-canonical scalar: " + text) {}
};

struct HashMismatchError : Error {
  using Error::Error;
};

struct LoopValidationError : Error {
  using Error::Error;
};

struct NotAGroupError : Error {
  using Error::Error;
};

struct NotIPLoopError : Error {
  using Error::Error;
};

struct FactorMismatchError : Error {
  using Error::Error;
};

struct UnknownConditionError : Error {
  explicit UnknownConditionError(const std::string& name)
      : Error("unknown twist condition: " + name) {}
};

struct QuasimoduleAxiomError : Error {
  using Error::Error;
};

}  // namespace hopfq
