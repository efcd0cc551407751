#ifndef MINSPAN_CONLL_HPP
#define MINSPAN_CONLL_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minspan/tree.hpp"

namespace minspan {

// One row of a CoNLL-2012 column file.
struct Token {
  std::string doc_id;
  int part = 0;
  int sentence_index = 0;
  int token_index = 0;
  std::string word;
  std::string pos;
  std::string parse_bit;
  std::string coref_field;
  std::vector<std::string> columns;  // the full row, kept for re-emission
  int line = 0;                      // 1-based source line, 0 if synthetic
};

struct Mention {
  std::string doc_id;
  int part = 0;
  int sentence_index = 0;
  SpanInterval span;
  int entity_id = 0;

  auto operator<=>(const Mention&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<ParseNode> tree;  // absent when the file carries no parse bits
};

struct Document {
  std::string doc_id;
  int part = 0;
  std::vector<Sentence> sentences;
  std::map<int, std::vector<Mention>> chains;  // entity id -> sorted mentions

  /// All mentions of all chains, sorted.
  std::vector<Mention> mentions() const;
  bool has_parse() const;
  /// Space-joined words of `span` in sentence `sentence_index`.
  std::string surface(int sentence_index, SpanInterval span) const;
};

struct ReadOptions {
  int coref_column = 0;  // 1-based; 0 selects the last column
};

/// Reads every "#begin document ... #end document" block. Documents come back
/// sorted by (doc_id, part). Duplicate same-entity spans are dropped and
/// reported through `warnings` when it is non-null.
std::vector<Document> read_conll(std::istream& in, const ReadOptions& options = {},
                                 std::vector<std::string>* warnings = nullptr);

/// Builds the sentence tree from the parse-bit column: every "*" stands for
/// "(POS word)". Throws ParseBitImbalance.
ParseNode reconstruct_tree(std::span<const Token> tokens);

/// Decodes the coreference column of one sentence with per-entity stacks.
/// "(N" opens, "N)" closes the most recent open of N, "(N)" is a one-token
/// mention. Results are sorted.
std::vector<Mention> decode_coref_column(std::span<const Token> tokens);

/// Writes documents back in column format. Parse bits are regenerated from
/// the trees and coreference fields from the chains.
void write_conll(std::ostream& out, const std::vector<Document>& docs);

/// Parse bits for each leaf of `tree`, in order ("(TOP(S(NP*", "*)", ...).
std::vector<std::string> parse_bits(const ParseNode& tree);

/// Word/POS/tree/chain equality; ignores raw column text.
bool same_content(const Document& a, const Document& b);

}  // namespace minspan

#endif
