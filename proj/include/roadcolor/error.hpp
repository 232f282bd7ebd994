#pragma once

#include <stdexcept>
#include <string>

namespace roadcolor {

enum class Errc {
  Shape,
  NotIrreducible,
  NotAperiodic,
  SameLetter,
  NotOnSameCycle,
  LevelNotZero,
  ConditionStarViolated,
  ConditionDoubleStarViolated,
  CaseAnalysisExhausted,
  TooSmall,
  NotClosed,
  NotAQuotient,
  TooLarge,
  Unsatisfiable,
  Parse,
  Version,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace roadcolor
