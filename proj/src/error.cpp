#include "minspan/error.hpp"

namespace minspan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorKind::EmptyConstituent: return "EmptyConstituent";
    case ErrorKind::TrailingGarbage: return "TrailingGarbage";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::MissingBeginDirective: return "MissingBeginDirective";
    case ErrorKind::ColumnCountTooSmall: return "ColumnCountTooSmall";
    case ErrorKind::ParseBitImbalance: return "ParseBitImbalance";
    case ErrorKind::CorefFieldMalformed: return "CorefFieldMalformed";
    case ErrorKind::UnclosedMention: return "UnclosedMention";
    case ErrorKind::CloseWithoutOpen: return "CloseWithoutOpen";
    case ErrorKind::SpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorKind::MissingParse: return "MissingParse";
    case ErrorKind::MinAnnotationMissing: return "MinAnnotationMissing";
    case ErrorKind::DocumentSetMismatch: return "DocumentSetMismatch";
    case ErrorKind::TokenizationMismatch: return "TokenizationMismatch";
    case ErrorKind::SidecarMalformed: return "SidecarMalformed";
    case ErrorKind::HeadTableMalformed: return "HeadTableMalformed";
  }
  return "Unknown";
}

}  // namespace minspan
