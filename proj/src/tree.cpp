#include "minspan/tree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "minspan/error.hpp"

namespace minspan {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_delimiter(char c) { return c == '(' || c == ')' || is_space(c); }

struct OpenConstituent {
  std::string raw_label;
  std::vector<ParseNode> children;
  std::size_t position;
};

}  // namespace

std::string to_string(const SpanInterval& span) {
  return std::to_string(span.start) + "-" + std::to_string(span.end);
}

ParseNode ParseNode::leaf(std::string word, int token_index) {
  ParseNode node;
  node.word = std::move(word);
  node.token_index = token_index;
  return node;
}

ParseNode ParseNode::constituent(std::string_view raw_label,
                                 std::vector<ParseNode> children) {
  ParseNode node;
  node.label = base_label(raw_label);
  node.raw_label = std::string(raw_label);
  node.children = std::move(children);
  return node;
}

std::string base_label(std::string_view raw) {
  // "-NONE-", "-LRB-" and similar are whole tags.
  if (!raw.empty() && raw.front() == '-') return std::string(raw);
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i] == '-' || raw[i] == '=') return std::string(raw.substr(0, i));
  }
  return std::string(raw);
}

ParseNode parse_bracketed(std::string_view text) {
  std::vector<OpenConstituent> stack;
  std::vector<ParseNode> done;
  int next_token = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto read_atom = [&]() {
    std::size_t begin = i;
    while (i < n && !is_delimiter(text[i])) ++i;
    return text.substr(begin, i - begin);
  };

  while (i < n) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (!done.empty()) {
      if (c == ')') {
        throw Error(ErrorKind::UnbalancedBrackets,
                    "unmatched ')' at position " + std::to_string(i));
      }
      throw Error(ErrorKind::TrailingGarbage,
                  "unexpected text at position " + std::to_string(i));
    }
    if (c == '(') {
      std::size_t open_at = i++;
      while (i < n && is_space(text[i])) ++i;
      if (i >= n) {
        throw Error(ErrorKind::UnbalancedBrackets,
                    "unclosed '(' at position " + std::to_string(open_at));
      }
      if (text[i] == '(' || text[i] == ')') {
        throw Error(ErrorKind::EmptyConstituent,
                    "constituent without label at position " +
                        std::to_string(open_at));
      }
      stack.push_back({std::string(read_atom()), {}, open_at});
    } else if (c == ')') {
      if (stack.empty()) {
        throw Error(ErrorKind::UnbalancedBrackets,
                    "unmatched ')' at position " + std::to_string(i));
      }
      OpenConstituent top = std::move(stack.back());
      stack.pop_back();
      if (top.children.empty()) {
        throw Error(ErrorKind::EmptyConstituent,
                    "constituent '" + top.raw_label + "' without children at position " +
                        std::to_string(top.position));
      }
      ParseNode node = ParseNode::constituent(top.raw_label, std::move(top.children));
      if (stack.empty()) {
        done.push_back(std::move(node));
      } else {
        stack.back().children.push_back(std::move(node));
      }
      ++i;
    } else {
      std::size_t at = i;
      std::string_view atom = read_atom();
      if (stack.empty()) {
        throw Error(ErrorKind::TrailingGarbage,
                    "token outside brackets at position " + std::to_string(at));
      }
      stack.back().children.push_back(ParseNode::leaf(std::string(atom), next_token++));
    }
  }
  if (!stack.empty()) {
    throw Error(ErrorKind::UnbalancedBrackets,
                "unclosed '(' at position " + std::to_string(stack.back().position));
  }
  if (done.empty()) throw Error(ErrorKind::EmptyTree, "no tree in input");
  return std::move(done.front());
}

std::string emit_bracketed(const ParseNode& node) {
  std::string out;
  // (node, next child to emit)
  std::vector<std::pair<const ParseNode*, std::size_t>> stack;
  stack.emplace_back(&node, 0);
  while (!stack.empty()) {
    auto& [current, next] = stack.back();
    if (current->is_leaf()) {
      out += current->word;
      stack.pop_back();
      continue;
    }
    if (next == 0) {
      out += '(';
      out += current->raw_label;
    }
    if (next == current->children.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    out += ' ';
    const ParseNode* child = &current->children[next++];
    stack.emplace_back(child, 0);
  }
  return out;
}

std::vector<const ParseNode*> leaves(const ParseNode& node) {
  std::vector<const ParseNode*> result;
  std::vector<const ParseNode*> stack{&node};
  while (!stack.empty()) {
    const ParseNode* current = stack.back();
    stack.pop_back();
    if (current->is_leaf()) {
      result.push_back(current);
      continue;
    }
    for (auto it = current->children.rbegin(); it != current->children.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
  return result;
}

SpanInterval subtree_span(const ParseNode& node) {
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  std::vector<const ParseNode*> stack{&node};
  while (!stack.empty()) {
    const ParseNode* current = stack.back();
    stack.pop_back();
    if (current->is_leaf()) {
      if (current->token_index < 0) continue;
      lo = std::min(lo, current->token_index);
      hi = std::max(hi, current->token_index);
      continue;
    }
    for (const ParseNode& child : current->children) stack.push_back(&child);
  }
  if (lo > hi) throw Error(ErrorKind::EmptyTree, "subtree has no tokens");
  return {lo, hi};
}

}  // namespace minspan
