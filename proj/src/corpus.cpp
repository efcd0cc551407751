#include "minspan/corpus.hpp"

namespace minspan {

DocumentAnalysis analyze_document(const Document& doc, const TagPolicy& policy,
                                  const HeadOptions& heads) {
  DocumentAnalysis analysis{doc.doc_id, doc.part, {}};
  for (const Mention& mention : doc.mentions()) {
    const ParseNode& tree = sentence_tree(doc, mention.sentence_index, mention.span);
    const ParseNode subtree = mention_subtree(tree, mention.span);
    analysis.mentions.push_back(
        {mention, extract_min_span(subtree, policy), head_span(subtree, heads)});
  }
  return analysis;
}

std::vector<DocumentAnalysis> analyze_corpus(const std::vector<Document>& docs,
                                             const TagPolicy& policy, const HeadOptions& heads,
                                             Execution execution) {
  std::vector<DocumentAnalysis> out(docs.size());
  for_each_index(docs.size(), execution,
                 [&](std::size_t i) { out[i] = analyze_document(docs[i], policy, heads); });
  return out;
}

}  // namespace minspan
