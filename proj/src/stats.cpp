#include "minspan/stats.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace minspan {

namespace {

std::size_t bin_of(std::size_t length) { return std::min<std::size_t>(length, 4) - 1; }

bool contains_all(const std::vector<int>& tokens, SpanInterval span) {
  for (int t = span.start; t <= span.end; ++t) {
    if (!std::binary_search(tokens.begin(), tokens.end(), t)) return false;
  }
  return true;
}

}  // namespace

LengthStats length_stats(const std::vector<DocumentAnalysis>& analyses) {
  LengthStats stats;
  long long max_total = 0;
  long long min_total = 0;
  for (const DocumentAnalysis& doc : analyses) {
    for (const MentionAnalysis& m : doc.mentions) {
      const auto max_len = static_cast<std::size_t>(m.mention.span.size());
      const auto min_len = m.mina.token_indices.size();
      ++stats.histogram_max[bin_of(max_len)];
      ++stats.histogram_min[bin_of(min_len)];
      max_total += static_cast<long long>(max_len);
      min_total += static_cast<long long>(min_len);
      ++stats.mention_count;
      if (m.mina.used_fallback) ++stats.fallback_count;
    }
  }
  if (stats.mention_count == 0) {
    stats.warnings.push_back("no mentions; mean lengths reported as 0");
    return stats;
  }
  stats.mean_max_len = static_cast<double>(max_total) / static_cast<double>(stats.mention_count);
  stats.mean_min_len = static_cast<double>(min_total) / static_cast<double>(stats.mention_count);
  return stats;
}

LengthStats length_stats(const std::vector<Document>& docs, const TagPolicy& policy,
                         Execution execution) {
  return length_stats(analyze_corpus(docs, policy, HeadOptions::defaults(), execution));
}

ContainmentStats containment_stats(const std::vector<Document>& docs,
                                   const MinAnnotations& annotations, const TagPolicy& policy,
                                   const HeadOptions& heads, Execution execution) {
  const auto analyses = analyze_corpus(docs, policy, heads, execution);
  using Key = std::tuple<std::string, int, int, SpanInterval>;
  std::map<Key, const MentionAnalysis*> by_span;
  for (const DocumentAnalysis& doc : analyses) {
    for (const MentionAnalysis& m : doc.mentions) {
      by_span.emplace(Key{m.mention.doc_id, m.mention.part, m.mention.sentence_index, m.mention.span},
                      &m);
    }
  }

  ContainmentStats stats;
  for (const MinAnnotation& row : annotations.rows()) {
    auto it = by_span.find(Key{row.doc_id, row.part, row.sentence_index, row.max_span});
    if (it == by_span.end()) {
      stats.warnings.push_back(row.doc_id + " part " + std::to_string(row.part) + " sentence " +
                               std::to_string(row.sentence_index) + " span " +
                               to_string(row.max_span) + ": no key mention; excluded");
      continue;
    }
    const MentionAnalysis& m = *it->second;
    ++stats.aligned;
    if (contains_all(m.mina.token_indices, row.min_span)) {
      ++stats.mina_contained;
    } else {
      stats.mina_mismatches.push_back({m.mention, m.mina.token_indices, row.min_span});
    }
    const std::vector<int> head{m.head.token_index};
    if (contains_all(head, row.min_span)) {
      ++stats.head_contained;
    } else {
      stats.head_mismatches.push_back({m.mention, head, row.min_span});
    }
  }
  if (stats.aligned > 0) {
    const double n = static_cast<double>(stats.aligned);
    stats.mina_contains_min_ratio = 100.0 * static_cast<double>(stats.mina_contained) / n;
    stats.head_contains_min_ratio = 100.0 * static_cast<double>(stats.head_contained) / n;
  }
  return stats;
}

std::vector<DistinctnessViolation> overlap_distinctness(
    const std::vector<DocumentAnalysis>& analyses) {
  std::vector<DistinctnessViolation> violations;
  for (const DocumentAnalysis& doc : analyses) {
    // Mentions sorted by sentence then span; one mention per distinct span.
    std::vector<const MentionAnalysis*> ms;
    for (const MentionAnalysis& m : doc.mentions) ms.push_back(&m);
    std::sort(ms.begin(), ms.end(), [](const MentionAnalysis* a, const MentionAnalysis* b) {
      return std::tie(a->mention.sentence_index, a->mention.span, a->mention.entity_id) <
             std::tie(b->mention.sentence_index, b->mention.span, b->mention.entity_id);
    });
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const Mention& a = ms[i]->mention;
        const Mention& b = ms[j]->mention;
        if (b.sentence_index != a.sentence_index || b.span.start > a.span.end) break;
        if (a.span == b.span || !a.span.overlaps(b.span)) continue;
        if (ms[i]->mina.token_indices == ms[j]->mina.token_indices) {
          violations.push_back(
              {DistinctnessViolation::Kind::Mina, a, b, ms[i]->mina.token_indices});
        }
        if (ms[i]->head.token_index == ms[j]->head.token_index) {
          violations.push_back(
              {DistinctnessViolation::Kind::Head, a, b, {ms[i]->head.token_index}});
        }
      }
    }
  }
  return violations;
}

std::vector<DistinctnessViolation> overlap_distinctness(const std::vector<Document>& docs,
                                                        const TagPolicy& policy,
                                                        const HeadOptions& heads,
                                                        Execution execution) {
  return overlap_distinctness(analyze_corpus(docs, policy, heads, execution));
}

}  // namespace minspan
