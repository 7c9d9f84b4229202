#include "sphereint/errors.hpp"

namespace sphereint {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonTrivalent: return "NonTrivalent";
    case ErrorKind::FixedDart: return "FixedDart";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::ForeignVertex: return "ForeignVertex";
    case ErrorKind::BadWord: return "BadWord";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::CircleDegreeNotTwo: return "CircleDegreeNotTwo";
    case ErrorKind::SphereLeaf: return "SphereLeaf";
    case ErrorKind::MissingBit: return "MissingBit";
    case ErrorKind::ExtraBit: return "ExtraBit";
    case ErrorKind::EmptySphere: return "EmptySphere";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::BadCarrier: return "BadCarrier";
    case ErrorKind::InternalSplit: return "InternalSplit";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

}  // namespace sphereint
