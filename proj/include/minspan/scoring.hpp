#ifndef MINSPAN_SCORING_HPP
#define MINSPAN_SCORING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minspan/conll.hpp"
#include "minspan/heads.hpp"
#include "minspan/metrics.hpp"
#include "minspan/mina.hpp"
#include "minspan/parallel.hpp"
#include "minspan/sidecar.hpp"

namespace minspan {

enum class MatchingMode { MaxSpan, MinaSpan, HeadWord, MucMin };

std::string_view to_string(MatchingMode mode);  // "max", "mina", "head", "mucmin"
std::optional<MatchingMode> parse_matching_mode(std::string_view name);

enum class Side { Key, Response };

struct ScoringOptions {
  TagPolicy policy = TagPolicy::defaults();
  HeadOptions heads = HeadOptions::defaults();
  const MinAnnotations* min_annotations = nullptr;  // required by MucMin
  bool per_document = false;
  Execution execution = Execution::Parallel;
};

/// Replaces every mention of `side_doc` by its identity under `mode`, always
/// resolving spans against the trees of `key_doc`.
///
/// A span listed under several entities is kept in the first one only. Under
/// MinaSpan and HeadWord, mentions of one side whose identities coincide
/// although their spans differ all revert to their maximum-span identity;
/// both cases add a line to `warnings`.
///
/// MucMin: key mentions keep their maximum span and must have a MIN
/// annotation. A response mention takes the identity of a key mention in the
/// same sentence when it contains the MIN and stays inside the maximum span;
/// each key mention is claimed once, exact-span matches first.
EntitySet project_identities(const Document& key_doc, const Document& side_doc, MatchingMode mode,
                             Side side, const ScoringOptions& options,
                             std::vector<std::string>& warnings);

/// Key/system documents paired by (doc_id, part). Throws DocumentSetMismatch
/// when the sets differ and TokenizationMismatch when sentences or words do.
std::vector<std::pair<const Document*, const Document*>> align_documents(
    const std::vector<Document>& key_docs, const std::vector<Document>& sys_docs);

struct MetricScores {
  Prf muc;
  Prf b3;
  Prf ceafe;
  Prf lea;
  double conll = 0;  // mean F1 of MUC, B3 and CEAF_e
};

struct DocumentScore {
  std::string doc_id;
  int part = 0;
  MetricScores scores;
};

/// Scores are fractions; reports round to percent when formatted.
struct ScoreReport {
  MatchingMode mode = MatchingMode::MaxSpan;
  MetricScores scores;
  std::vector<std::string> warnings;
  std::vector<DocumentScore> documents;  // filled when per_document is set
};

/// Corpus-level scores: numerators and denominators are summed over
/// documents before dividing. Documents are projected and counted in
/// parallel; the result does not depend on the worker count.
ScoreReport score_all(const std::vector<Document>& key_docs, const std::vector<Document>& sys_docs,
                      MatchingMode mode, const ScoringOptions& options = {});

/// Serial reference: builds one corpus-wide entity set per side and scores
/// it in a single pass, without per-document decomposition.
ScoreReport score_all_reference(const std::vector<Document>& key_docs,
                                const std::vector<Document>& sys_docs, MatchingMode mode,
                                const ScoringOptions& options = {});

}  // namespace minspan

#endif
