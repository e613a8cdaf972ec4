#pragma once

#include <stdexcept>
#include <string>

namespace fernlab {

enum class ErrorKind {
  Parse,
  Validation,
  DimensionMismatch,
  SizeGuard,
  BadSubset,
  BadDegree,
  Singular,
  NoWitness,
  CriticalPosition,
  DegenerateDenominator,
  CriticalInput,
};

// Process exit categories: 1 = usage, 2 = validation, 3 = computation.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return 1;
    case ErrorKind::Validation:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::SizeGuard:
    case ErrorKind::BadSubset:
    case ErrorKind::BadDegree:
      return 2;
    default:
      return 3;
  }
}

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::CriticalPosition: return "CriticalPosition";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::CriticalInput: return "CriticalInput";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fernlab
