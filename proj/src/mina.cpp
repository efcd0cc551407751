#include "minspan/mina.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "minspan/error.hpp"

namespace minspan {

namespace {

struct Candidate {
  const ParseNode* node;
  int depth;
};

// A constituent all of whose children are words or preterminals.
bool is_terminal_constituent(const ParseNode& node) {
  if (node.is_leaf() || node.is_preterminal()) return false;
  return std::all_of(node.children.begin(), node.children.end(), [](const ParseNode& child) {
    return child.is_leaf() || child.is_preterminal();
  });
}

bool is_phrase(const ParseNode& node) { return !node.is_leaf() && !node.is_preterminal(); }

struct TagChoice {
  const std::set<std::string>* tags = nullptr;
  std::unordered_set<const ParseNode*> pass_through;
};

TagChoice choose_tags(const ParseNode& root, const TagPolicy& policy) {
  TagChoice choice;
  if (policy.np_tags.count(root.label)) {
    choice.tags = &policy.np_tags;
    return choice;
  }
  if (policy.vp_tags.count(root.label)) {
    choice.tags = &policy.vp_tags;
    return choice;
  }
  std::unordered_map<const ParseNode*, const ParseNode*> parent;
  std::deque<const ParseNode*> queue{&root};
  while (!queue.empty()) {
    const ParseNode* node = queue.front();
    queue.pop_front();
    if (node != &root && is_phrase(*node)) {
      const bool np = policy.np_tags.count(node->label) != 0;
      if (np || policy.vp_tags.count(node->label)) {
        choice.tags = np ? &policy.np_tags : &policy.vp_tags;
        for (const ParseNode* up = parent[node]; up; up = parent[up]) {
          choice.pass_through.insert(up);
        }
        return choice;
      }
    }
    for (const ParseNode& child : node->children) {
      if (!is_phrase(child)) continue;
      parent[&child] = node;
      queue.push_back(&child);
    }
  }
  return choice;
}

struct Unit {
  MinUnit info;
  std::vector<int> tokens;
  bool acceptable = false;
};

void add_word(Unit& unit, const ParseNode& word, const std::string& pos, int depth,
              const TagPolicy& policy) {
  unit.tokens.push_back(word.token_index);
  unit.info.token_depth = std::min(unit.info.token_depth, depth);
  // Bare words (trees without POS preterminals) have no tag to exclude.
  if (pos.empty() || !policy.excludes(pos)) unit.acceptable = true;
}

Unit make_unit(const std::string& label) {
  Unit unit;
  unit.info.label = label;
  unit.info.token_depth = std::numeric_limits<int>::max();
  return unit;
}

void finish_unit(Unit& unit) {
  std::sort(unit.tokens.begin(), unit.tokens.end());
  unit.info.span = {unit.tokens.front(), unit.tokens.back()};
}

}  // namespace

const std::set<std::string>& punctuation_tags() {
  static const std::set<std::string> tags{",", ".", ":", "``", "''", "-LRB-", "-RRB-", "HYPH"};
  return tags;
}

TagPolicy TagPolicy::defaults() {
  TagPolicy policy = strict_paper();
  policy.excluded_pos.insert(punctuation_tags().begin(), punctuation_tags().end());
  return policy;
}

TagPolicy TagPolicy::strict_paper() {
  return TagPolicy{{"NP", "NML", "QP", "NX"}, {"VP"}, {"DT", "CC"}};
}

ParseNode mention_subtree(const ParseNode& sentence_tree, SpanInterval span) {
  const SpanInterval whole = subtree_span(sentence_tree);
  if (span.start > span.end || !whole.contains(span)) {
    throw Error(ErrorKind::SpanOutOfBounds,
                "span " + to_string(span) + " outside tree " + to_string(whole));
  }

  const ParseNode* cover = &sentence_tree;
  for (;;) {
    if (subtree_span(*cover) == span) return *cover;
    const ParseNode* next = nullptr;
    for (const ParseNode& child : cover->children) {
      if (subtree_span(child).contains(span)) {
        next = &child;
        break;
      }
    }
    if (!next) break;
    cover = next;
  }

  std::vector<ParseNode> tiles;
  std::vector<const ParseNode*> stack;
  for (auto it = cover->children.rbegin(); it != cover->children.rend(); ++it) stack.push_back(&*it);
  while (!stack.empty()) {
    const ParseNode* node = stack.back();
    stack.pop_back();
    const SpanInterval yield = subtree_span(*node);
    if (span.contains(yield)) {
      tiles.push_back(*node);
    } else if (span.overlaps(yield)) {
      for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
        stack.push_back(&*it);
      }
    }
  }
  return ParseNode::constituent("X", std::move(tiles));
}

MinSpanResult extract_min_span(const ParseNode& mention_tree, const TagPolicy& policy) {
  MinSpanResult result;
  std::vector<Unit> units;

  const TagChoice choice = choose_tags(mention_tree, policy);
  if (choice.tags) {
    const auto& tags = *choice.tags;
    std::deque<Candidate> queue{{&mention_tree, 0}};
    while (!queue.empty()) {
      const auto [node, depth] = queue.front();
      queue.pop_front();
      if (!tags.count(node->label)) {
        if (!choice.pass_through.count(node)) continue;
        for (const ParseNode& child : node->children) {
          if (is_phrase(child)) queue.push_back({&child, depth + 1});
        }
        continue;
      }
      if (is_terminal_constituent(*node)) {
        Unit unit = make_unit(node->label);
        for (const ParseNode& child : node->children) {
          if (child.is_leaf()) {
            add_word(unit, child, "", depth + 1, policy);
          } else {
            add_word(unit, child.children.front(), child.label, depth + 2, policy);
          }
        }
        finish_unit(unit);
        units.push_back(std::move(unit));
        continue;
      }
      for (const ParseNode& child : node->children) {
        if (child.is_leaf()) {
          Unit unit = make_unit("");
          add_word(unit, child, "", depth + 1, policy);
          finish_unit(unit);
          units.push_back(std::move(unit));
        } else if (child.is_preterminal()) {
          Unit unit = make_unit(child.label);
          add_word(unit, child.children.front(), child.label, depth + 2, policy);
          finish_unit(unit);
          units.push_back(std::move(unit));
        } else {
          queue.push_back({&child, depth + 1});
        }
      }
    }
  }

  int min_depth = std::numeric_limits<int>::max();
  for (const Unit& unit : units) {
    if (unit.acceptable) min_depth = std::min(min_depth, unit.info.token_depth);
  }
  for (Unit& unit : units) {
    if (!unit.acceptable || unit.info.token_depth != min_depth) continue;
    result.token_indices.insert(result.token_indices.end(), unit.tokens.begin(), unit.tokens.end());
    result.units.push_back(std::move(unit.info));
  }

  if (result.token_indices.empty()) {
    result.used_fallback = true;
    for (const ParseNode* leaf : leaves(mention_tree)) result.token_indices.push_back(leaf->token_index);
  }
  std::sort(result.token_indices.begin(), result.token_indices.end());
  result.token_indices.erase(std::unique(result.token_indices.begin(), result.token_indices.end()),
                             result.token_indices.end());
  std::sort(result.units.begin(), result.units.end(),
            [](const MinUnit& a, const MinUnit& b) { return a.span < b.span; });
  return result;
}

const ParseNode& sentence_tree(const Document& doc, int sentence_index, SpanInterval span) {
  if (sentence_index < 0 || sentence_index >= static_cast<int>(doc.sentences.size())) {
    throw Error(ErrorKind::SpanOutOfBounds,
                doc.doc_id + ": sentence " + std::to_string(sentence_index) + " does not exist");
  }
  const Sentence& sentence = doc.sentences[sentence_index];
  if (!sentence.tree) {
    throw Error(ErrorKind::MissingParse,
                doc.doc_id + " sentence " + std::to_string(sentence_index) +
                    " has no parse bits; supply a parsed key file");
  }
  const int n = static_cast<int>(sentence.tokens.size());
  if (span.start < 0 || span.end >= n || span.start > span.end) {
    throw Error(ErrorKind::SpanOutOfBounds, doc.doc_id + " sentence " +
                                                std::to_string(sentence_index) + ": span " +
                                                to_string(span));
  }
  return *sentence.tree;
}

MinSpanResult min_span_for(const Document& doc, int sentence_index, SpanInterval span,
                           const TagPolicy& policy) {
  const ParseNode& tree = sentence_tree(doc, sentence_index, span);
  return extract_min_span(mention_subtree(tree, span), policy);
}

std::map<Mention, MinSpanResult> min_spans_for_document(const Document& doc,
                                                        std::span<const Mention> mentions,
                                                        const TagPolicy& policy) {
  std::map<Mention, MinSpanResult> result;
  for (const Mention& mention : mentions) {
    result.emplace(mention, min_span_for(doc, mention.sentence_index, mention.span, policy));
  }
  return result;
}

}  // namespace minspan
