#include "minspan/compare.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "minspan/scoring.hpp"

namespace minspan {

namespace {

using SpanKey = std::pair<int, SpanInterval>;

std::map<SpanKey, Mention> distinct_spans(const Document& doc) {
  std::map<SpanKey, Mention> spans;
  for (const Mention& m : doc.mentions()) spans.emplace(SpanKey{m.sentence_index, m.span}, m);
  return spans;
}

std::vector<BoundaryMismatch> compare_document(const Document& key, const Document& sys,
                                               const TagPolicy& policy) {
  const auto key_spans = distinct_spans(key);
  const auto sys_spans = distinct_spans(sys);

  // (sentence, MINA tokens) -> key mentions with that MINA span
  std::map<std::pair<int, std::vector<int>>, std::vector<const Mention*>> key_by_min;
  for (const auto& [at, m] : key_spans) {
    auto tokens = min_span_for(key, m.sentence_index, m.span, policy).token_indices;
    key_by_min[{m.sentence_index, std::move(tokens)}].push_back(&m);
  }

  std::vector<BoundaryMismatch> out;
  for (const auto& [at, s] : sys_spans) {
    auto tokens = min_span_for(key, s.sentence_index, s.span, policy).token_indices;
    auto it = key_by_min.find({s.sentence_index, tokens});
    if (it == key_by_min.end()) continue;
    for (const Mention* k : it->second) {
      if (k->span == s.span) continue;
      out.push_back({*k, s, tokens, key.surface(k->sentence_index, k->span),
                     key.surface(s.sentence_index, s.span)});
    }
  }
  std::sort(out.begin(), out.end(), [](const BoundaryMismatch& a, const BoundaryMismatch& b) {
    return std::tie(a.key.sentence_index, a.key.span, a.sys.span) <
           std::tie(b.key.sentence_index, b.key.span, b.sys.span);
  });
  return out;
}

}  // namespace

std::vector<BoundaryMismatch> compare_boundaries(const std::vector<Document>& key_docs,
                                                 const std::vector<Document>& sys_docs,
                                                 const TagPolicy& policy, Execution execution) {
  const auto pairs = align_documents(key_docs, sys_docs);
  std::vector<std::vector<BoundaryMismatch>> per_doc(pairs.size());
  for_each_index(pairs.size(), execution, [&](std::size_t i) {
    per_doc[i] = compare_document(*pairs[i].first, *pairs[i].second, policy);
  });
  std::vector<BoundaryMismatch> out;
  for (auto& doc : per_doc) {
    out.insert(out.end(), std::make_move_iterator(doc.begin()), std::make_move_iterator(doc.end()));
  }
  return out;
}

}  // namespace minspan
