#include "minspan/sidecar.hpp"

#include <istream>
#include <sstream>

#include "minspan/error.hpp"

namespace minspan {

SpanInterval parse_span(const std::string& text) {
  auto dash = text.find('-', 1);
  try {
    if (dash == std::string::npos) {
      int i = std::stoi(text);
      return {i, i};
    }
    std::size_t used = 0;
    SpanInterval span{std::stoi(text.substr(0, dash), &used), 0};
    if (used != dash) throw std::invalid_argument(text);
    span.end = std::stoi(text.substr(dash + 1), &used);
    if (used != text.size() - dash - 1) throw std::invalid_argument(text);
    if (span.start < 0 || span.start > span.end) throw std::invalid_argument(text);
    return span;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::SidecarMalformed, "bad span '" + text + "'");
  }
}

MinAnnotations MinAnnotations::read(std::istream& in) {
  MinAnnotations annotations;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() != 5) {
      throw Error(ErrorKind::SidecarMalformed,
                  "line " + std::to_string(number) + ": expected 5 tab-separated fields");
    }
    MinAnnotation row;
    row.doc_id = fields[0];
    try {
      row.part = std::stoi(fields[1]);
      row.sentence_index = std::stoi(fields[2]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::SidecarMalformed, "line " + std::to_string(number));
    }
    row.max_span = parse_span(fields[3]);
    row.min_span = parse_span(fields[4]);
    annotations.add(std::move(row));
  }
  return annotations;
}

void MinAnnotations::add(MinAnnotation annotation) {
  if (!annotation.max_span.contains(annotation.min_span)) {
    throw Error(ErrorKind::SidecarMalformed,
                annotation.doc_id + ": MIN " + to_string(annotation.min_span) +
                    " is not inside max " + to_string(annotation.max_span));
  }
  index_[{annotation.doc_id, annotation.part, annotation.sentence_index, annotation.max_span}] =
      annotation.min_span;
  rows_.push_back(std::move(annotation));
}

std::optional<SpanInterval> MinAnnotations::find(const std::string& doc_id, int part,
                                                 int sentence_index, SpanInterval max_span) const {
  auto it = index_.find({doc_id, part, sentence_index, max_span});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace minspan
