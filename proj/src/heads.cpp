#include "minspan/heads.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "minspan/error.hpp"
#include "minspan/mina.hpp"

namespace minspan {

namespace {

const std::string kNoTag;

const std::string& tag_of(const ParseNode& node) { return node.is_leaf() ? kNoTag : node.label; }

// Rightmost path down to the final word; returns (preterminal or null, leaf).
std::pair<const ParseNode*, const ParseNode*> last_word(const ParseNode& node) {
  const ParseNode* parent = nullptr;
  const ParseNode* current = &node;
  while (!current->is_leaf()) {
    parent = current;
    current = &current->children.back();
  }
  return {parent, current};
}

HeadResult last_non_punctuation(const ParseNode& node, const HeadOptions& options) {
  const ParseNode* chosen = nullptr;
  const ParseNode* last = nullptr;
  std::vector<std::pair<const ParseNode*, const ParseNode*>> stack{{nullptr, &node}};
  while (!stack.empty()) {
    auto [parent, current] = stack.back();
    stack.pop_back();
    if (current->is_leaf()) {
      last = current;
      const bool punct = parent && parent->is_preterminal() &&
                         options.punctuation.count(parent->label);
      if (!punct) chosen = current;
      continue;
    }
    for (auto it = current->children.rbegin(); it != current->children.rend(); ++it) {
      stack.emplace_back(current, &*it);
    }
  }
  if (!last) throw Error(ErrorKind::EmptyTree, "head of a tree without words");
  return {(chosen ? chosen : last)->token_index, HeadRule::NonNPFallback};
}

const ParseNode* find_child(const ParseNode& node, const std::set<std::string>& tags,
                            bool left_to_right) {
  const auto& kids = node.children;
  if (left_to_right) {
    for (const ParseNode& child : kids) {
      if (tags.count(tag_of(child))) return &child;
    }
  } else {
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (tags.count(tag_of(*it))) return &*it;
    }
  }
  return nullptr;
}

int resolve(const ParseNode& child, const HeadOptions& options) {
  if (child.is_leaf()) return child.token_index;
  if (child.is_preterminal()) return child.children.front().token_index;
  return head_span(child, options).token_index;
}

}  // namespace

std::string_view to_string(HeadRule rule) {
  switch (rule) {
    case HeadRule::LastWordPOS: return "LastWordPOS";
    case HeadRule::RightNN: return "RightNN";
    case HeadRule::LeftNP: return "LeftNP";
    case HeadRule::RightAdj: return "RightAdj";
    case HeadRule::RightCD: return "RightCD";
    case HeadRule::RightJJ: return "RightJJ";
    case HeadRule::LastWord: return "LastWord";
    case HeadRule::NonNPFallback: return "NonNPFallback";
    case HeadRule::TableRule: return "TableRule";
  }
  return "Unknown";
}

HeadTable HeadTable::read(std::istream& in) {
  HeadTable table;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(field);
    if (fields.size() != 3 || fields[0].empty() ||
        (fields[1] != "left" && fields[1] != "right")) {
      throw Error(ErrorKind::HeadTableMalformed,
                  "line " + std::to_string(number) + ": expected TAG;left|right;TAG1,TAG2");
    }
    Rule rule;
    rule.left_to_right = fields[1] == "left";
    std::stringstream tags(fields[2]);
    while (std::getline(tags, field, ',')) {
      if (!field.empty()) rule.priority.push_back(field);
    }
    table.rules_[fields[0]].push_back(std::move(rule));
  }
  return table;
}

const std::vector<HeadTable::Rule>* HeadTable::rules_for(const std::string& tag) const {
  auto it = rules_.find(tag);
  return it == rules_.end() ? nullptr : &it->second;
}

HeadOptions HeadOptions::defaults() {
  HeadOptions options;
  options.punctuation = punctuation_tags();
  return options;
}

HeadResult collins_np_head(const ParseNode& node, const HeadOptions& options) {
  if (node.is_leaf()) return {node.token_index, HeadRule::LastWord};

  auto [preterminal, word] = last_word(node);
  if (preterminal && preterminal->is_preterminal() && preterminal->label == "POS") {
    return {word->token_index, HeadRule::LastWordPOS};
  }

  static const std::set<std::string> nouns{"NN", "NNP", "NNPS", "NNS", "NX", "POS", "JJR"};
  static const std::set<std::string> np{"NP"};
  static const std::set<std::string> adjectival{"$", "ADJP", "PRN"};
  static const std::set<std::string> numbers{"CD"};
  static const std::set<std::string> modifiers{"JJ", "JJS", "RB", "QP"};

  struct Step {
    const std::set<std::string>& tags;
    bool left_to_right;
    HeadRule rule;
  };
  const Step steps[] = {
      {nouns, false, HeadRule::RightNN},   {np, true, HeadRule::LeftNP},
      {adjectival, false, HeadRule::RightAdj}, {numbers, false, HeadRule::RightCD},
      {modifiers, false, HeadRule::RightJJ},
  };
  for (const Step& step : steps) {
    if (const ParseNode* child = find_child(node, step.tags, step.left_to_right)) {
      return {resolve(*child, options), step.rule};
    }
  }
  return {word->token_index, HeadRule::LastWord};
}

HeadResult head_span(const ParseNode& mention_tree, const HeadOptions& options) {
  if (mention_tree.is_leaf()) {
    if (mention_tree.token_index < 0) throw Error(ErrorKind::EmptyTree, "head of an empty tree");
    return {mention_tree.token_index, HeadRule::LastWord};
  }
  if (options.np_tags.count(mention_tree.label)) return collins_np_head(mention_tree, options);

  if (options.table && !mention_tree.is_preterminal()) {
    if (const auto* rules = options.table->rules_for(mention_tree.label)) {
      for (const HeadTable::Rule& rule : *rules) {
        for (const std::string& tag : rule.priority) {
          if (const ParseNode* child = find_child(mention_tree, {tag}, rule.left_to_right)) {
            return {resolve(*child, options), HeadRule::TableRule};
          }
        }
      }
      const ParseNode& fallback = rules->front().left_to_right ? mention_tree.children.front()
                                                               : mention_tree.children.back();
      return {resolve(fallback, options), HeadRule::TableRule};
    }
  }
  return last_non_punctuation(mention_tree, options);
}

}  // namespace minspan
