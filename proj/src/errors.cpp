#include "ellclass/errors.hpp"

namespace ellclass {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::CrossTerm: return "CrossTerm";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::DistinctnessError: return "DistinctnessError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LooseLoose: return "LooseLoose";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::BadCharacterShape: return "BadCharacterShape";
    case ErrorKind::AlreadySquare: return "AlreadySquare";
    case ErrorKind::ImpurityError: return "ImpurityError";
    case ErrorKind::ReducedUndefined: return "ReducedUndefined";
    case ErrorKind::NotPermutationPattern: return "NotPermutationPattern";
    case ErrorKind::NotWeightPattern: return "NotWeightPattern";
    case ErrorKind::RestrictionPole: return "RestrictionPole";
    case ErrorKind::ResampleExhausted: return "ResampleExhausted";
  }
  return "Unknown";
}

}  // namespace ellclass
