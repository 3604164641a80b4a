#pragma once

#include <stdexcept>
#include <string>

namespace negabeta {

enum class ErrorKind {
  NoSuchRoot,
  DegenerateDegree,
  DivisionByZero,
  NonInvertible,
  RefinementBudgetExceeded,
  BadEmbeddingIndex,
  OutOfDomain,
  UndecidedReference,
  HypothesisViolated,
  TrivialSet,
  NotSofic,
  CommutationFailed,
  ParseError,
  IoFailure,
  UnboundedEmbedding,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::DegenerateDegree: return "DegenerateDegree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::RefinementBudgetExceeded: return "RefinementBudgetExceeded";
    case ErrorKind::BadEmbeddingIndex: return "BadEmbeddingIndex";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::UndecidedReference: return "UndecidedReference";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TrivialSet: return "TrivialSet";
    case ErrorKind::NotSofic: return "NotSofic";
    case ErrorKind::CommutationFailed: return "CommutationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::UnboundedEmbedding: return "UnboundedEmbedding";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace negabeta
