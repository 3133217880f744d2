#pragma once

#include <stdexcept>
#include <string>

namespace bsg {

enum class ErrorKind {
  ParseError,
  InvalidParams,
  BoundExceeded,
  RadiusExceeded,
  GroupTooLarge,
  ClosureTooLarge,
  EmptySet,
  NotInFullGroup,
  NotNormal,
  NotACocycle,
  IndexNotConstant,
  NotQuasiNormal,
  NotMeasurePreserving,
  TargetMismatch,
  InvalidLevel,
  InfiniteComponents,
  NotPowerValued,
  ParamMismatch,
  LevelBudgetExceeded,
  NotAUnit,
  PrecisionError,
  NotErgodic,
  AxiomViolation,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bsg
