#include "minspan/scoring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "minspan/error.hpp"

namespace minspan {

namespace {

struct Projected {
  Mention mention;
  SpanIdentity identity;
  bool reverted = false;
};

SpanIdentity range_identity(const Mention& m) {
  SpanIdentity id{m.doc_id, m.part, m.sentence_index, {}};
  id.tokens.resize(m.span.size());
  std::iota(id.tokens.begin(), id.tokens.end(), m.span.start);
  return id;
}

std::string where(const Mention& m) {
  return m.doc_id + " part " + std::to_string(m.part) + " sentence " +
         std::to_string(m.sentence_index) + " span " + to_string(m.span);
}

const char* side_name(Side side) { return side == Side::Key ? "key" : "system"; }

// Mentions of the side in entity order, each (sentence, span) at most once.
std::vector<Mention> unique_mentions(const Document& doc, Side side,
                                     std::vector<std::string>& warnings) {
  std::vector<Mention> out;
  std::map<std::tuple<int, SpanInterval>, int> seen;
  for (const auto& [entity, chain] : doc.chains) {
    for (const Mention& m : chain) {
      auto [it, fresh] = seen.emplace(std::make_tuple(m.sentence_index, m.span), entity);
      if (!fresh) {
        if (it->second != entity) {
          warnings.push_back(std::string(side_name(side)) + " " + where(m) +
                             ": listed under entities " + std::to_string(it->second) +
                             " and " + std::to_string(entity) + "; kept in " +
                             std::to_string(it->second));
        }
        continue;
      }
      out.push_back(m);
    }
  }
  return out;
}

void resolve_collisions(std::vector<Projected>& projected, MatchingMode mode, Side side,
                        std::vector<std::string>& warnings) {
  for (;;) {
    std::map<SpanIdentity, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < projected.size(); ++i) groups[projected[i].identity].push_back(i);
    bool changed = false;
    for (const auto& [identity, members] : groups) {
      if (members.size() < 2) continue;
      std::string list;
      for (std::size_t i : members) {
        Projected& p = projected[i];
        list += " " + to_string(p.mention.span) + "(e" + std::to_string(p.mention.entity_id) + ")";
        if (!p.reverted) {
          p.reverted = true;
          p.identity = range_identity(p.mention);
          changed = true;
        }
      }
      warnings.push_back(std::string(side_name(side)) + " " + std::string(to_string(mode)) +
                         " collision in " +
                         projected[members.front()].mention.doc_id + " sentence " +
                         std::to_string(projected[members.front()].mention.sentence_index) +
                         ":" + list + " reverted to maximum spans");
    }
    if (!changed) return;
  }
}

EntitySet to_entity_set(const std::vector<Projected>& projected) {
  std::map<int, Entity> by_entity;
  for (const Projected& p : projected) by_entity[p.mention.entity_id].push_back(p.identity);
  EntitySet set;
  for (auto& [entity, ids] : by_entity) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    set.entities.push_back(std::move(ids));
  }
  return set;
}

const MinAnnotations& require_annotations(const ScoringOptions& options) {
  if (!options.min_annotations) {
    throw Error(ErrorKind::MinAnnotationMissing, "MucMin matching needs a MIN sidecar");
  }
  return *options.min_annotations;
}

SpanInterval require_min(const MinAnnotations& annotations, const Mention& m) {
  auto min = annotations.find(m.doc_id, m.part, m.sentence_index, m.span);
  if (!min) throw Error(ErrorKind::MinAnnotationMissing, where(m));
  return *min;
}

void project_muc_min_response(const Document& key_doc, std::vector<Projected>& projected,
                              const ScoringOptions& options) {
  const MinAnnotations& annotations = require_annotations(options);
  struct KeyMention {
    Mention mention;
    SpanInterval min;
    bool claimed = false;
  };
  std::vector<KeyMention> keys;
  std::vector<std::string> ignored;
  for (const Mention& m : unique_mentions(key_doc, Side::Key, ignored)) {
    keys.push_back({m, require_min(annotations, m)});
  }
  std::sort(keys.begin(), keys.end(), [](const KeyMention& a, const KeyMention& b) {
    return std::tie(a.mention.sentence_index, a.mention.span) <
           std::tie(b.mention.sentence_index, b.mention.span);
  });

  std::vector<std::size_t> order(projected.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(projected[a].mention.sentence_index, projected[a].mention.span) <
           std::tie(projected[b].mention.sentence_index, projected[b].mention.span);
  });
  std::vector<bool> matched(projected.size(), false);

  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i : order) {
      if (matched[i]) continue;
      const Mention& m = projected[i].mention;
      for (KeyMention& key : keys) {
        if (key.claimed || key.mention.sentence_index != m.sentence_index) continue;
        const bool fits = pass == 0 ? key.mention.span == m.span
                                    : m.span.contains(key.min) && key.mention.span.contains(m.span);
        if (!fits) continue;
        key.claimed = true;
        matched[i] = true;
        projected[i].identity = range_identity(key.mention);
        break;
      }
    }
  }
}

}  // namespace

std::string_view to_string(MatchingMode mode) {
  switch (mode) {
    case MatchingMode::MaxSpan: return "max";
    case MatchingMode::MinaSpan: return "mina";
    case MatchingMode::HeadWord: return "head";
    case MatchingMode::MucMin: return "mucmin";
  }
  return "unknown";
}

std::optional<MatchingMode> parse_matching_mode(std::string_view name) {
  for (MatchingMode mode : {MatchingMode::MaxSpan, MatchingMode::MinaSpan, MatchingMode::HeadWord,
                            MatchingMode::MucMin}) {
    if (to_string(mode) == name) return mode;
  }
  return std::nullopt;
}

EntitySet project_identities(const Document& key_doc, const Document& side_doc, MatchingMode mode,
                             Side side, const ScoringOptions& options,
                             std::vector<std::string>& warnings) {
  std::vector<Projected> projected;
  for (const Mention& m : unique_mentions(side_doc, side, warnings)) {
    projected.push_back({m, range_identity(m), false});
  }

  switch (mode) {
    case MatchingMode::MaxSpan:
      break;
    case MatchingMode::MinaSpan:
    case MatchingMode::HeadWord:
      if (!key_doc.has_parse()) {
        throw Error(ErrorKind::MissingParse,
                    key_doc.doc_id + ": key file has no parse bits; supply a parsed key file");
      }
      for (Projected& p : projected) {
        const Mention& m = p.mention;
        const ParseNode subtree =
            mention_subtree(sentence_tree(key_doc, m.sentence_index, m.span), m.span);
        if (mode == MatchingMode::MinaSpan) {
          p.identity.tokens = extract_min_span(subtree, options.policy).token_indices;
        } else {
          p.identity.tokens = {head_span(subtree, options.heads).token_index};
        }
      }
      resolve_collisions(projected, mode, side, warnings);
      break;
    case MatchingMode::MucMin:
      if (side == Side::Key) {
        const MinAnnotations& annotations = require_annotations(options);
        for (const Projected& p : projected) require_min(annotations, p.mention);
      } else {
        project_muc_min_response(key_doc, projected, options);
      }
      break;
  }
  return to_entity_set(projected);
}

std::vector<std::pair<const Document*, const Document*>> align_documents(
    const std::vector<Document>& key_docs, const std::vector<Document>& sys_docs) {
  std::map<std::pair<std::string, int>, const Document*> sys_by_id;
  for (const Document& doc : sys_docs) sys_by_id[{doc.doc_id, doc.part}] = &doc;
  if (sys_by_id.size() != sys_docs.size()) {
    throw Error(ErrorKind::DocumentSetMismatch, "system file repeats a (document, part)");
  }

  std::vector<std::pair<const Document*, const Document*>> pairs;
  for (const Document& key : key_docs) {
    auto it = sys_by_id.find({key.doc_id, key.part});
    if (it == sys_by_id.end()) {
      throw Error(ErrorKind::DocumentSetMismatch,
                  key.doc_id + " part " + std::to_string(key.part) + " missing from system file");
    }
    const Document& sys = *it->second;
    if (sys.sentences.size() != key.sentences.size()) {
      throw Error(ErrorKind::TokenizationMismatch,
                  key.doc_id + ": " + std::to_string(key.sentences.size()) + " key sentences vs " +
                      std::to_string(sys.sentences.size()) + " system sentences");
    }
    for (std::size_t s = 0; s < key.sentences.size(); ++s) {
      const auto& kt = key.sentences[s].tokens;
      const auto& st = sys.sentences[s].tokens;
      bool same = kt.size() == st.size();
      for (std::size_t t = 0; same && t < kt.size(); ++t) same = kt[t].word == st[t].word;
      if (!same) {
        throw Error(ErrorKind::TokenizationMismatch,
                    key.doc_id + ": sentence " + std::to_string(s) + " differs between files");
      }
    }
    pairs.emplace_back(&key, &sys);
  }
  if (pairs.size() != sys_docs.size()) {
    throw Error(ErrorKind::DocumentSetMismatch, "system file has documents absent from the key");
  }
  return pairs;
}

namespace {

struct Counts {
  MetricCounts muc, b3, ceafe, lea;

  Counts& operator+=(const Counts& other) {
    muc += other.muc;
    b3 += other.b3;
    ceafe += other.ceafe;
    lea += other.lea;
    return *this;
  }

  MetricScores scores() const {
    MetricScores out{muc.prf(), b3.prf(), ceafe.prf(), lea.prf(), 0};
    out.conll = (out.muc.f1 + out.b3.f1 + out.ceafe.f1) / 3.0;
    return out;
  }
};

Counts count_all(const EntitySet& key, const EntitySet& response) {
  return {muc_counts(key, response), b3_counts(key, response), ceafe_counts(key, response),
          lea_counts(key, response)};
}

}  // namespace

ScoreReport score_all(const std::vector<Document>& key_docs, const std::vector<Document>& sys_docs,
                      MatchingMode mode, const ScoringOptions& options) {
  const auto pairs = align_documents(key_docs, sys_docs);

  std::vector<Counts> counts(pairs.size());
  std::vector<std::vector<std::string>> warnings(pairs.size());
  for_each_index(pairs.size(), options.execution, [&](std::size_t i) {
    const auto [key, sys] = pairs[i];
    EntitySet k = project_identities(*key, *key, mode, Side::Key, options, warnings[i]);
    EntitySet r = project_identities(*key, *sys, mode, Side::Response, options, warnings[i]);
    counts[i] = count_all(k, r);
  });

  ScoreReport report;
  report.mode = mode;
  Counts total;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    total += counts[i];
    report.warnings.insert(report.warnings.end(), warnings[i].begin(), warnings[i].end());
    if (options.per_document) {
      report.documents.push_back({pairs[i].first->doc_id, pairs[i].first->part, counts[i].scores()});
    }
  }
  report.scores = total.scores();
  return report;
}

ScoreReport score_all_reference(const std::vector<Document>& key_docs,
                                const std::vector<Document>& sys_docs, MatchingMode mode,
                                const ScoringOptions& options) {
  ScoreReport report;
  report.mode = mode;
  EntitySet key_all;
  EntitySet sys_all;
  for (const auto& [key, sys] : align_documents(key_docs, sys_docs)) {
    EntitySet k = project_identities(*key, *key, mode, Side::Key, options, report.warnings);
    EntitySet r = project_identities(*key, *sys, mode, Side::Response, options, report.warnings);
    key_all.entities.insert(key_all.entities.end(), k.entities.begin(), k.entities.end());
    sys_all.entities.insert(sys_all.entities.end(), r.entities.begin(), r.entities.end());
    if (options.per_document) {
      report.documents.push_back({key->doc_id, key->part, count_all(k, r).scores()});
    }
  }
  report.scores = count_all(key_all, sys_all).scores();
  return report;
}

}  // namespace minspan
