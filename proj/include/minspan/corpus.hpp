#ifndef MINSPAN_CORPUS_HPP
#define MINSPAN_CORPUS_HPP

#include <vector>

#include "minspan/conll.hpp"
#include "minspan/heads.hpp"
#include "minspan/mina.hpp"
#include "minspan/parallel.hpp"

namespace minspan {

struct MentionAnalysis {
  Mention mention;
  MinSpanResult mina;
  HeadResult head;

  bool operator==(const MentionAnalysis&) const = default;
};

struct DocumentAnalysis {
  std::string doc_id;
  int part = 0;
  std::vector<MentionAnalysis> mentions;  // same order as Document::mentions()

  bool operator==(const DocumentAnalysis&) const = default;
};

/// MINA span and head word of every key mention, one document per task.
/// Throws MissingParse for documents without trees.
std::vector<DocumentAnalysis> analyze_corpus(const std::vector<Document>& docs,
                                             const TagPolicy& policy, const HeadOptions& heads,
                                             Execution execution = Execution::Parallel);

DocumentAnalysis analyze_document(const Document& doc, const TagPolicy& policy,
                                  const HeadOptions& heads);

}  // namespace minspan

#endif
