#include "roadcolor/error.hpp"

namespace roadcolor {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Shape: return "ShapeError";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotAperiodic: return "NotAperiodic";
    case Errc::SameLetter: return "SameLetter";
    case Errc::NotOnSameCycle: return "NotOnSameCycle";
    case Errc::LevelNotZero: return "LevelNotZero";
    case Errc::ConditionStarViolated: return "ConditionStarViolated";
    case Errc::ConditionDoubleStarViolated: return "ConditionDoubleStarViolated";
    case Errc::CaseAnalysisExhausted: return "CaseAnalysisExhausted";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotAQuotient: return "NotAQuotient";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Unsatisfiable: return "Unsatisfiable";
    case Errc::Parse: return "ParseError";
    case Errc::Version: return "VersionError";
  }
  return "Error";
}

}  // namespace roadcolor
