#ifndef MINSPAN_TREE_HPP
#define MINSPAN_TREE_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace minspan {

/// Inclusive token interval [start, end] within one sentence.
struct SpanInterval {
  int start = 0;
  int end = 0;

  int size() const { return end - start + 1; }
  bool contains(int index) const { return start <= index && index <= end; }
  bool contains(const SpanInterval& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const SpanInterval& other) const {
    return start <= other.end && other.start <= end;
  }

  auto operator<=>(const SpanInterval&) const = default;
};

std::string to_string(const SpanInterval& span);  // "start-end"

/// Constituency tree node.
///
/// A leaf carries a word and its 0-based position in the sentence and has no
/// children. Every other node has a label and at least one child. `label` is
/// the base tag (functional suffixes such as "-SBJ" or "=2" removed);
/// `raw_label` keeps the text as read and is what gets emitted.
///
/// Depth is never stored; traversals compute it relative to whichever node
/// they start from.
struct ParseNode {
  std::string label;
  std::string raw_label;
  std::vector<ParseNode> children;
  std::string word;
  int token_index = -1;

  static ParseNode leaf(std::string word, int token_index);
  static ParseNode constituent(std::string_view raw_label,
                               std::vector<ParseNode> children);

  bool is_leaf() const { return children.empty(); }
  bool is_preterminal() const {
    return children.size() == 1 && children.front().is_leaf();
  }

  bool operator==(const ParseNode&) const = default;
};

/// Strips functional-tag suffixes: "NP-SBJ" -> "NP", "NP=2" -> "NP".
/// Labels that begin with '-' ("-LRB-", "-NONE-") are returned unchanged.
std::string base_label(std::string_view raw);

/// Reads one single-line bracketed tree, e.g. "(NP (DT a) (NN copy))".
/// Bare atoms become leaves numbered 0..n-1 in surface order. Iterative, so
/// nesting depth is bounded only by memory.
ParseNode parse_bracketed(std::string_view text);

/// Single-line form, one space between siblings. Inverse of parse_bracketed.
std::string emit_bracketed(const ParseNode& node);

/// [min leaf index, max leaf index]. Throws EmptyTree when no leaf exists.
SpanInterval subtree_span(const ParseNode& node);

/// Leaves in left-to-right order.
std::vector<const ParseNode*> leaves(const ParseNode& node);

}  // namespace minspan

#endif
