#pragma once

#include <stdexcept>
#include <string>

namespace lsc {

enum class Errc {
  NotGCM,
  NotSymmetrizable,
  IndexOutOfRange,
  NotFiniteType,
  NotDominant,
  NonIntegralMinimum,
  NotReducedWord,
  BudgetExceeded,
  NotSimplyLaced,
  DuplicateIndices,
  PositionOutOfRange,
  NotRegular,
  NotARoot,
  NotDistinctSimpleSum,
  MinBoundViolated,
  SumMismatch,
  HypothesisViolated,
  BadSupport,
  NotDeep,
  LengthConditionFailed,
  NotDominantDifference,
  UnsupportedChildType,
  SelfValidationFailed,
  InvariantBroken,
  Overflow,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotGCM: return "NotGCM";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NonIntegralMinimum: return "NonIntegralMinimum";
    case Errc::NotReducedWord: return "NotReducedWord";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotSimplyLaced: return "NotSimplyLaced";
    case Errc::DuplicateIndices: return "DuplicateIndices";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotARoot: return "NotARoot";
    case Errc::NotDistinctSimpleSum: return "NotDistinctSimpleSum";
    case Errc::MinBoundViolated: return "MinBoundViolated";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BadSupport: return "BadSupport";
    case Errc::NotDeep: return "NotDeep";
    case Errc::LengthConditionFailed: return "LengthConditionFailed";
    case Errc::NotDominantDifference: return "NotDominantDifference";
    case Errc::UnsupportedChildType: return "UnsupportedChildType";
    case Errc::SelfValidationFailed: return "SelfValidationFailed";
    case Errc::InvariantBroken: return "InvariantBroken";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace lsc
