#include "avgpart/error.hpp"

namespace avgpart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::CliqueTooSmall: return "CliqueTooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace avgpart
