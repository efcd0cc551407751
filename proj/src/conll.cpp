#include "minspan/conll.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "minspan/error.hpp"

namespace minspan {

namespace {

std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> columns;
  std::istringstream in(line);
  std::string column;
  while (in >> column) columns.push_back(std::move(column));
  return columns;
}

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

// "#begin document (name); part 000"
std::pair<std::string, int> parse_begin_line(const std::string& line) {
  std::string rest = line.substr(std::string_view("#begin document").size());
  std::string doc_id;
  int part = 0;
  auto first = rest.find_first_not_of(" \t");
  if (first != std::string::npos && rest[first] == '(') {
    auto close = rest.find(')', first);
    doc_id = rest.substr(first + 1, close == std::string::npos ? std::string::npos
                                                                : close - first - 1);
    rest = close == std::string::npos ? std::string() : rest.substr(close + 1);
  } else if (first != std::string::npos) {
    auto semi = rest.find(';', first);
    doc_id = rest.substr(first, semi == std::string::npos ? std::string::npos : semi - first);
    while (!doc_id.empty() && (doc_id.back() == ' ' || doc_id.back() == '\t')) doc_id.pop_back();
    rest = semi == std::string::npos ? std::string() : rest.substr(semi);
  }
  auto part_at = rest.find("part");
  if (part_at != std::string::npos) {
    std::istringstream in(rest.substr(part_at + 4));
    in >> part;
  }
  return {doc_id, part};
}

bool has_brackets(const std::string& bit) {
  return bit.find_first_of("()") != std::string::npos;
}

Error coref_error(const Token& token, const std::string& what) {
  return Error(ErrorKind::CorefFieldMalformed,
               "line " + std::to_string(token.line) + ": " + what + " in '" +
                   token.coref_field + "'");
}

}  // namespace

std::vector<Mention> Document::mentions() const {
  std::vector<Mention> all;
  for (const auto& [entity, chain] : chains) all.insert(all.end(), chain.begin(), chain.end());
  std::sort(all.begin(), all.end());
  return all;
}

bool Document::has_parse() const {
  return std::all_of(sentences.begin(), sentences.end(),
                     [](const Sentence& s) { return s.tree.has_value(); });
}

std::string Document::surface(int sentence_index, SpanInterval span) const {
  const auto& tokens = sentences.at(sentence_index).tokens;
  std::string out;
  for (int i = span.start; i <= span.end && i < static_cast<int>(tokens.size()); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].word;
  }
  return out;
}

ParseNode reconstruct_tree(std::span<const Token> tokens) {
  struct Open {
    std::string raw_label;
    std::vector<ParseNode> children;
  };
  const int sentence = tokens.empty() ? 0 : tokens.front().sentence_index;
  auto imbalance = [&](const std::string& what) {
    return Error(ErrorKind::ParseBitImbalance,
                 "sentence " + std::to_string(sentence) + ": " + what);
  };

  std::vector<Open> stack;
  std::optional<ParseNode> root;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token& token = tokens[t];
    const std::string& bit = token.parse_bit;
    if (std::count(bit.begin(), bit.end(), '*') != 1) {
      throw imbalance("parse bit '" + bit + "' must contain exactly one '*'");
    }
    std::size_t i = 0;
    while (i < bit.size()) {
      char c = bit[i];
      if (c == '(') {
        std::size_t end = bit.find_first_of("(*)", i + 1);
        std::string label = bit.substr(i + 1, end == std::string::npos ? std::string::npos
                                                                        : end - i - 1);
        if (label.empty()) throw imbalance("empty label in '" + bit + "'");
        if (root) throw imbalance("material after the root constituent closed");
        stack.push_back({label, {}});
        i = end == std::string::npos ? bit.size() : end;
      } else if (c == '*') {
        if (stack.empty()) throw imbalance("token '" + token.word + "' outside any constituent");
        std::vector<ParseNode> leaf;
        leaf.push_back(ParseNode::leaf(token.word, static_cast<int>(t)));
        stack.back().children.push_back(ParseNode::constituent(token.pos, std::move(leaf)));
        ++i;
      } else if (c == ')') {
        if (stack.empty()) throw imbalance("unmatched ')' in '" + bit + "'");
        Open top = std::move(stack.back());
        stack.pop_back();
        ParseNode node = ParseNode::constituent(top.raw_label, std::move(top.children));
        if (stack.empty()) {
          root = std::move(node);
        } else {
          stack.back().children.push_back(std::move(node));
        }
        ++i;
      } else {
        throw imbalance("unexpected character in '" + bit + "'");
      }
    }
  }
  if (!stack.empty()) throw imbalance(std::to_string(stack.size()) + " unclosed constituent(s)");
  if (!root) throw imbalance("no constituent");
  return std::move(*root);
}

std::vector<Mention> decode_coref_column(std::span<const Token> tokens) {
  std::vector<Mention> mentions;
  std::map<int, std::vector<int>> open;  // entity -> stack of start indices
  const int sentence = tokens.empty() ? 0 : tokens.front().sentence_index;

  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token& token = tokens[t];
    const std::string& field = token.coref_field;
    if (field == "-" || field == "_") continue;
    const int index = static_cast<int>(t);

    std::size_t begin = 0;
    while (begin <= field.size()) {
      std::size_t bar = field.find('|', begin);
      std::string_view item(field.data() + begin,
                            (bar == std::string::npos ? field.size() : bar) - begin);
      begin = bar == std::string::npos ? field.size() + 1 : bar + 1;

      if (item.empty()) throw coref_error(token, "empty item");
      bool opens = item.front() == '(';
      bool closes = item.back() == ')';
      if (!opens && !closes) throw coref_error(token, "item without bracket");
      std::string_view digits = item.substr(opens ? 1 : 0);
      if (closes) digits.remove_suffix(1);
      auto entity = parse_int(digits);
      if (!entity || *entity < 0) throw coref_error(token, "bad entity id");

      Mention mention{token.doc_id, token.part, sentence, {index, index}, *entity};
      if (opens && closes) {
        mentions.push_back(mention);
      } else if (opens) {
        open[*entity].push_back(index);
      } else {
        auto& stack = open[*entity];
        if (stack.empty()) {
          throw Error(ErrorKind::CloseWithoutOpen,
                      "line " + std::to_string(token.line) + ": entity " +
                          std::to_string(*entity) + " closed without an open mention");
        }
        mention.span.start = stack.back();
        stack.pop_back();
        mentions.push_back(mention);
      }
    }
  }
  for (const auto& [entity, stack] : open) {
    if (!stack.empty()) {
      throw Error(ErrorKind::UnclosedMention, "entity " + std::to_string(entity) +
                                                  " in sentence " + std::to_string(sentence));
    }
  }
  std::sort(mentions.begin(), mentions.end());
  return mentions;
}

std::vector<Document> read_conll(std::istream& in, const ReadOptions& options,
                                 std::vector<std::string>* warnings) {
  std::vector<Document> docs;
  std::optional<Document> current;
  std::vector<Token> pending;

  auto warn = [&](const std::string& message) {
    if (warnings) warnings->push_back(message);
  };

  auto flush_sentence = [&]() {
    if (pending.empty()) return;
    Sentence sentence;
    const bool parsed = std::any_of(pending.begin(), pending.end(),
                                    [](const Token& t) { return has_brackets(t.parse_bit); });
    if (parsed) sentence.tree = reconstruct_tree(pending);
    for (Mention& mention : decode_coref_column(pending)) {
      auto& chain = current->chains[mention.entity_id];
      if (std::find(chain.begin(), chain.end(), mention) != chain.end()) {
        warn(current->doc_id + " part " + std::to_string(current->part) + ": duplicate mention " +
             to_string(mention.span) + " of entity " + std::to_string(mention.entity_id) +
             " in sentence " + std::to_string(mention.sentence_index) + " dropped");
        continue;
      }
      chain.push_back(std::move(mention));
    }
    sentence.tokens = std::move(pending);
    pending.clear();
    current->sentences.push_back(std::move(sentence));
  };

  auto finish_document = [&]() {
    if (!current) return;
    flush_sentence();
    for (auto& [entity, chain] : current->chains) std::sort(chain.begin(), chain.end());
    docs.push_back(std::move(*current));
    current.reset();
  };

  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (starts_with(line, "#begin document")) {
      finish_document();
      auto [doc_id, part] = parse_begin_line(line);
      current.emplace();
      current->doc_id = std::move(doc_id);
      current->part = part;
      continue;
    }
    if (starts_with(line, "#end document")) {
      finish_document();
      continue;
    }
    if (!line.empty() && line.front() == '#') continue;

    auto columns = split_columns(line);
    if (columns.empty()) {
      if (current) flush_sentence();
      continue;
    }
    if (!current) {
      throw Error(ErrorKind::MissingBeginDirective,
                  "line " + std::to_string(line_number) + " precedes any #begin document");
    }
    const std::size_t coref_at =
        options.coref_column > 0 ? static_cast<std::size_t>(options.coref_column) : columns.size();
    const std::size_t needed = options.coref_column > 0
                                   ? std::max<std::size_t>(6, options.coref_column)
                                   : 7;
    if (columns.size() < needed || coref_at <= 6) {
      throw Error(ErrorKind::ColumnCountTooSmall,
                  "line " + std::to_string(line_number) + " has " +
                      std::to_string(columns.size()) + " columns");
    }

    Token token;
    token.doc_id = current->doc_id;
    token.part = current->part;
    token.sentence_index = static_cast<int>(current->sentences.size());
    token.token_index = static_cast<int>(pending.size());
    token.word = columns[3];
    token.pos = columns[4];
    token.parse_bit = columns[5];
    token.coref_field = columns[coref_at - 1];
    token.columns = std::move(columns);
    token.line = line_number;
    pending.push_back(std::move(token));
  }
  finish_document();

  std::stable_sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) {
    return std::tie(a.doc_id, a.part) < std::tie(b.doc_id, b.part);
  });
  return docs;
}

std::vector<std::string> parse_bits(const ParseNode& tree) {
  std::vector<std::string> bits;
  std::string pending;
  // (node, next child); preterminals and bare leaves are emitted as "*".
  std::vector<std::pair<const ParseNode*, std::size_t>> stack;
  stack.emplace_back(&tree, 0);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (node->is_leaf() || node->is_preterminal()) {
      bits.push_back(pending + "*");
      pending.clear();
      stack.pop_back();
      continue;
    }
    if (next == 0) pending += "(" + node->raw_label;
    if (next == node->children.size()) {
      if (!bits.empty()) bits.back() += ")";
      stack.pop_back();
      continue;
    }
    const ParseNode* child = &node->children[next++];
    stack.emplace_back(child, 0);
  }
  return bits;
}

namespace {

std::vector<std::string> coref_fields(const Document& doc, int sentence_index, std::size_t size) {
  std::vector<std::vector<std::string>> closes(size), opens(size), singles(size);
  for (const auto& [entity, chain] : doc.chains) {
    for (const Mention& m : chain) {
      if (m.sentence_index != sentence_index) continue;
      const std::string id = std::to_string(entity);
      if (m.span.start == m.span.end) {
        singles[m.span.start].push_back("(" + id + ")");
      } else {
        opens[m.span.start].push_back("(" + id);
        closes[m.span.end].push_back(id + ")");
      }
    }
  }
  std::vector<std::string> fields(size);
  for (std::size_t i = 0; i < size; ++i) {
    // Closes first so that a same-entity mention ending here pops its own
    // start rather than one opened on this token.
    std::vector<std::string> items = closes[i];
    items.insert(items.end(), singles[i].begin(), singles[i].end());
    items.insert(items.end(), opens[i].begin(), opens[i].end());
    if (items.empty()) {
      fields[i] = "-";
      continue;
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (k) fields[i] += '|';
      fields[i] += items[k];
    }
  }
  return fields;
}

}  // namespace

void write_conll(std::ostream& out, const std::vector<Document>& docs) {
  for (const Document& doc : docs) {
    char part[16];
    std::snprintf(part, sizeof(part), "%03d", doc.part);
    out << "#begin document (" << doc.doc_id << "); part " << part << '\n';
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      const Sentence& sentence = doc.sentences[s];
      std::vector<std::string> bits =
          sentence.tree ? parse_bits(*sentence.tree)
                        : std::vector<std::string>(sentence.tokens.size(), "*");
      auto fields = coref_fields(doc, static_cast<int>(s), sentence.tokens.size());
      for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
        const Token& token = sentence.tokens[t];
        std::vector<std::string> columns = token.columns;
        if (columns.size() < 7) {
          columns = {doc.doc_id, std::to_string(doc.part), std::to_string(t), token.word,
                     token.pos, "*", "-", "-", "-", "-", "*", "-"};
        }
        columns[3] = token.word;
        columns[4] = token.pos;
        columns[5] = t < bits.size() ? bits[t] : "*";
        columns.back() = fields[t];
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (c) out << "   ";
          out << columns[c];
        }
        out << '\n';
      }
      out << '\n';
    }
    out << "#end document\n";
  }
}

bool same_content(const Document& a, const Document& b) {
  if (a.doc_id != b.doc_id || a.part != b.part || a.chains != b.chains ||
      a.sentences.size() != b.sentences.size()) {
    return false;
  }
  for (std::size_t s = 0; s < a.sentences.size(); ++s) {
    const Sentence& x = a.sentences[s];
    const Sentence& y = b.sentences[s];
    if (x.tree != y.tree || x.tokens.size() != y.tokens.size()) return false;
    for (std::size_t t = 0; t < x.tokens.size(); ++t) {
      if (x.tokens[t].word != y.tokens[t].word || x.tokens[t].pos != y.tokens[t].pos) return false;
    }
  }
  return true;
}

}  // namespace minspan
