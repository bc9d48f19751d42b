#pragma once

#include <stdexcept>
#include <string>

namespace nearassoc {

// Every failure the library can raise, by stable machine-readable code.
// The CLI maps these to exit codes and a machine-readable "error" field.
enum class Errc {
  ContextMismatch,
  DivisionByZero,
  DimensionMismatch,
  WrongDimension,
  NotABimodule,
  NotAMatchedPair,
  NotARepresentation,
  DegenerateForm,
  NotInvariant,
  IntertwinerFails,
  LRNotCommuting,
  SearchSpaceTooLarge,
  InvalidParams,
  NoSquareRoot,
  CharTwoFamilyIII,
  ConditionsFail,
  ParseError,
  PostconditionFailed,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nearassoc
