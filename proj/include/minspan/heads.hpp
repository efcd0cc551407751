#ifndef MINSPAN_HEADS_HPP
#define MINSPAN_HEADS_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "minspan/tree.hpp"

namespace minspan {

enum class HeadRule {
  LastWordPOS,
  RightNN,
  LeftNP,
  RightAdj,
  RightCD,
  RightJJ,
  LastWord,
  NonNPFallback,
  TableRule,
};

std::string_view to_string(HeadRule rule);

struct HeadResult {
  int token_index = -1;
  HeadRule rule_fired = HeadRule::LastWord;

  bool operator==(const HeadResult&) const = default;
};

// Head rules for non-NP phrases, one line per rule:
//
//   TAG;left|right;TAG1,TAG2,...
//
// Lines for the same TAG are tried in file order. Within a line, each listed
// tag is searched for in turn, scanning the children in the given direction.
// If no line matches, the first child in the direction of the first line is
// the head child.
class HeadTable {
 public:
  struct Rule {
    bool left_to_right = true;
    std::vector<std::string> priority;
  };

  static HeadTable read(std::istream& in);

  const std::vector<Rule>* rules_for(const std::string& tag) const;
  bool empty() const { return rules_.empty(); }

 private:
  std::map<std::string, std::vector<Rule>> rules_;
};

struct HeadOptions {
  std::set<std::string> np_tags{"NP", "NML", "QP", "NX"};
  std::set<std::string> punctuation;
  std::shared_ptr<const HeadTable> table;

  static HeadOptions defaults();
};

/// Collins' NP head rules applied to the children of `node`. A matched
/// phrasal child is resolved to a single word with head_span.
HeadResult collins_np_head(const ParseNode& node,
                           const HeadOptions& options = HeadOptions::defaults());

/// Head word of any mention tree: NP-tagged roots use collins_np_head, roots
/// listed in the head table use the table, anything else takes the last
/// non-punctuation word. Throws EmptyTree for a tree without words.
HeadResult head_span(const ParseNode& mention_tree,
                     const HeadOptions& options = HeadOptions::defaults());

}  // namespace minspan

#endif
