#pragma once

#include <stdexcept>
#include <string>

namespace vca {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// I : J with J the zero ideal.
class UndefinedColon : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateCone : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TruncatedPresentation : public Error {
 public:
  using Error::Error;
};

// Malformed file content (missing keys, wrong JSON types, bad cover strings).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

enum class ComplexDefect {
  EmptyFacet,
  VertexOutOfRange,
  DuplicateVertex,
  ComparableFacets,
  NonPositiveWeight,
  WeightCountMismatch,
};

inline const char* to_string(ComplexDefect d) {
  switch (d) {
    case ComplexDefect::EmptyFacet: return "empty facet";
    case ComplexDefect::VertexOutOfRange: return "vertex out of range";
    case ComplexDefect::DuplicateVertex: return "repeated vertex in facet";
    case ComplexDefect::ComparableFacets: return "comparable facets";
    case ComplexDefect::NonPositiveWeight: return "non-positive weight";
    case ComplexDefect::WeightCountMismatch: return "weight count does not match facet count";
  }
  return "unknown defect";
}

class InvalidComplex : public Error {
 public:
  InvalidComplex(ComplexDefect defect, const std::string& detail)
      : Error(std::string(to_string(defect)) + ": " + detail), defect_(defect) {}

  ComplexDefect defect() const noexcept { return defect_; }

 private:
  ComplexDefect defect_;
};

}  // namespace vca
