#ifndef MINSPAN_ERROR_HPP
#define MINSPAN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace minspan {

enum class ErrorKind {
  UnbalancedBrackets,
  EmptyConstituent,
  TrailingGarbage,
  EmptyTree,
  MissingBeginDirective,
  ColumnCountTooSmall,
  ParseBitImbalance,
  CorefFieldMalformed,
  UnclosedMention,
  CloseWithoutOpen,
  SpanOutOfBounds,
  MissingParse,
  MinAnnotationMissing,
  DocumentSetMismatch,
  TokenizationMismatch,
  SidecarMalformed,
  HeadTableMalformed,
};

std::string_view to_string(ErrorKind kind);

// Every data error raised by the library. Usage errors never reach here.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace minspan

#endif
