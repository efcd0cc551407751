#ifndef MINSPAN_STATS_HPP
#define MINSPAN_STATS_HPP

#include <array>
#include <string>
#include <vector>

#include "minspan/conll.hpp"
#include "minspan/corpus.hpp"
#include "minspan/sidecar.hpp"

namespace minspan {

/// Span lengths in words, binned as 1, 2, 3 and >= 4.
struct LengthStats {
  double mean_max_len = 0;
  double mean_min_len = 0;
  std::array<long long, 4> histogram_max{};
  std::array<long long, 4> histogram_min{};
  long long mention_count = 0;
  long long fallback_count = 0;
  std::vector<std::string> warnings;
};

LengthStats length_stats(const std::vector<DocumentAnalysis>& analyses);
LengthStats length_stats(const std::vector<Document>& docs, const TagPolicy& policy,
                         Execution execution = Execution::Parallel);

struct ContainmentMismatch {
  Mention mention;
  std::vector<int> extracted;
  SpanInterval min;
};

/// Share of aligned MIN annotations whose tokens all lie inside the MINA
/// span (resp. inside the single head word), in percent.
struct ContainmentStats {
  double mina_contains_min_ratio = 0;
  double head_contains_min_ratio = 0;
  long long aligned = 0;
  long long mina_contained = 0;
  long long head_contained = 0;
  std::vector<ContainmentMismatch> mina_mismatches;
  std::vector<ContainmentMismatch> head_mismatches;
  std::vector<std::string> warnings;  // unaligned annotations, excluded from ratios
};

ContainmentStats containment_stats(const std::vector<Document>& docs,
                                   const MinAnnotations& annotations, const TagPolicy& policy,
                                   const HeadOptions& heads = HeadOptions::defaults(),
                                   Execution execution = Execution::Parallel);

struct DistinctnessViolation {
  enum class Kind { Mina, Head };
  Kind kind;
  Mention first;
  Mention second;
  std::vector<int> tokens;  // the shared identity
};

/// Pairs of overlapping annotated mentions (same sentence, any entities)
/// whose MINA spans, or head words, are identical.
std::vector<DistinctnessViolation> overlap_distinctness(
    const std::vector<Document>& docs, const TagPolicy& policy,
    const HeadOptions& heads = HeadOptions::defaults(), Execution execution = Execution::Parallel);

std::vector<DistinctnessViolation> overlap_distinctness(
    const std::vector<DocumentAnalysis>& analyses);

}  // namespace minspan

#endif
