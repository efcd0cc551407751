#ifndef MINSPAN_MINA_HPP
#define MINSPAN_MINA_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "minspan/conll.hpp"
#include "minspan/tree.hpp"

namespace minspan {

/// Which constituents minimum-span extraction may descend into, and which
/// POS tags cannot by themselves make a unit acceptable.
struct TagPolicy {
  std::set<std::string> np_tags;
  std::set<std::string> vp_tags;
  std::set<std::string> excluded_pos;

  /// NP/NML/QP/NX, VP, and determiners, conjunctions and punctuation excluded.
  static TagPolicy defaults();
  /// Same tag sets but only DT and CC excluded.
  static TagPolicy strict_paper();

  bool excludes(const std::string& pos) const { return excluded_pos.count(pos) != 0; }
};

/// Punctuation POS tags added to the default exclusion set.
const std::set<std::string>& punctuation_tags();

struct MinUnit {
  std::string label;  // constituent tag, or POS tag for a single-token unit
  SpanInterval span;
  int token_depth = 0;  // edges from the mention root to the unit's words
};

struct MinSpanResult {
  std::vector<int> token_indices;  // sorted, nonempty
  bool used_fallback = false;
  std::vector<MinUnit> units;  // empty when the fallback fired

  bool operator==(const MinSpanResult&) const = default;
};

/// Tree of the mention covering `span` exactly. Returns a copy of the highest
/// node whose yield is exactly `span`; failing that, a synthetic "X" node
/// over the largest nodes inside `span` that tile it, found by descending
/// from the lowest node covering the span into every partially covered child.
ParseNode mention_subtree(const ParseNode& sentence_tree, SpanInterval span);

/// Breadth-first minimum-span extraction.
///
/// The tag set is the NP set when the root tag is in np_tags, the VP set when
/// it is in vp_tags, and otherwise the set of the first NP/VP-tagged node met
/// in breadth-first order. In the last case the root and the ancestors of that
/// node are passed through; every other constituent whose tag is outside the
/// tag set is not entered.
///
/// Candidate units are acceptable-tag constituents that dominate only
/// preterminals (never split further) and preterminal children of
/// acceptable constituents that also have phrasal children. A unit counts
/// when one of its words has a POS outside `excluded_pos`. All counting units
/// whose words sit at the smallest depth are returned; with none, the whole
/// mention is returned and `used_fallback` is set.
MinSpanResult extract_min_span(const ParseNode& mention_tree, const TagPolicy& policy);

/// mention_subtree + extract_min_span against the document's own trees.
/// Throws MissingParse when a sentence has no tree and SpanOutOfBounds for
/// mentions outside their sentence.
std::map<Mention, MinSpanResult> min_spans_for_document(const Document& doc,
                                                        std::span<const Mention> mentions,
                                                        const TagPolicy& policy);

/// Single-mention convenience used by the corpus kernels.
MinSpanResult min_span_for(const Document& doc, int sentence_index, SpanInterval span,
                           const TagPolicy& policy);

/// Tree of sentence `sentence_index`, or MissingParse / SpanOutOfBounds.
const ParseNode& sentence_tree(const Document& doc, int sentence_index, SpanInterval span);

}  // namespace minspan

#endif
