#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphereint {

enum class ErrorKind {
  ParseError,
  NonTrivalent,
  FixedDart,
  Disconnected,
  RankTooSmall,
  ForeignVertex,
  BadWord,
  NotConnected,
  NotAlternating,
  CircleDegreeNotTwo,
  SphereLeaf,
  MissingBit,
  ExtraBit,
  EmptySphere,
  DuplicateVertex,
  BadCarrier,
  InternalSplit,
  BoundTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; name() is the stable
// identifier surfaced by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace sphereint
