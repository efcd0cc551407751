#ifndef MINSPAN_SIDECAR_HPP
#define MINSPAN_SIDECAR_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "minspan/tree.hpp"

namespace minspan {

/// Manually annotated minimum span (MIN) of one key mention.
struct MinAnnotation {
  std::string doc_id;
  int part = 0;
  int sentence_index = 0;
  SpanInterval max_span;
  SpanInterval min_span;
};

// Tab-separated rows: doc_id, part, sentence, max "start-end", MIN "start-end".
// Blank lines and lines starting with '#' are skipped. MIN must lie inside max.
class MinAnnotations {
 public:
  static MinAnnotations read(std::istream& in);

  void add(MinAnnotation annotation);
  std::optional<SpanInterval> find(const std::string& doc_id, int part, int sentence_index,
                                   SpanInterval max_span) const;
  const std::vector<MinAnnotation>& rows() const { return rows_; }

 private:
  using Key = std::tuple<std::string, int, int, SpanInterval>;
  std::map<Key, SpanInterval> index_;
  std::vector<MinAnnotation> rows_;
};

SpanInterval parse_span(const std::string& text);  // "3-5"

}  // namespace minspan

#endif
