#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ellclass {

enum class ErrorKind {
  InvalidArgument,
  PoleProximity,
  NotDivisible,
  NotACharacter,
  TrivialCharacter,
  CrossTerm,
  BadRank,
  DistinctnessError,
  ParseError,
  LooseLoose,
  Unreachable,
  BadCharacterShape,
  AlreadySquare,
  ImpurityError,
  ReducedUndefined,
  NotPermutationPattern,
  NotWeightPattern,
  RestrictionPole,
  ResampleExhausted,
};

/// Stable identifier used in JSON error objects.
std::string_view error_kind_name(ErrorKind kind);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Pattern or argument text failed to parse; `offset` is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& message)
      : Error(kind, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A theta argument came too close to a lattice zero; `path` names the leaf.
class PoleError : public Error {
 public:
  PoleError(std::string path, const std::string& message)
      : Error(ErrorKind::PoleProximity, message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace ellclass
