#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricdm {

enum class ErrorCode {
  InvalidInput,
  NotFullDimensional,
  LatticeNotFull,
  NotPointed,
  SearchBoundExceeded,
  GeneratorNotInSemigroup,
  DimensionUnsupported,
  NotScored,
  IsNormal,
  HypothesisFailed,
  NoInteriorPoint,
  CycleDetected,
  ClassRankMismatch,
  ClassNotEnumerated,
  EnumerationIncomplete,
  Overflow,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace toricdm
