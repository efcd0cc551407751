#include "minspan/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace minspan {

namespace {

using nlohmann::json;

json prf_json(const Prf& prf) {
  return {{"r", percent(prf.recall)}, {"p", percent(prf.precision)}, {"f1", percent(prf.f1)}};
}

json metrics_json(const MetricScores& scores) {
  return {{"muc", prf_json(scores.muc)},
          {"b3", prf_json(scores.b3)},
          {"ceafe", prf_json(scores.ceafe)},
          {"lea", prf_json(scores.lea)}};
}

std::string join(const std::vector<int>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tokens[i]);
  }
  return out;
}

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, round_half_up(value, decimals));
  return buffer;
}

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

json mention_json(const Mention& m) {
  return {{"doc_id", m.doc_id},
          {"part", m.part},
          {"sentence", m.sentence_index},
          {"span", to_string(m.span)},
          {"entity", m.entity_id}};
}

}  // namespace

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The epsilon absorbs binary representation error on exact ties (x.xx5).
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

double percent(double fraction) { return round_half_up(100.0 * fraction, 2); }

json to_json(const ScoreReport& report) {
  json out = {{"mode", std::string(to_string(report.mode))},
              {"metrics", metrics_json(report.scores)},
              {"conll_avg", percent(report.scores.conll)},
              {"warnings", report.warnings}};
  if (!report.documents.empty()) {
    json docs = json::array();
    for (const DocumentScore& doc : report.documents) {
      docs.push_back({{"doc_id", doc.doc_id},
                      {"part", doc.part},
                      {"metrics", metrics_json(doc.scores)},
                      {"conll_avg", percent(doc.scores.conll)}});
    }
    out["documents"] = std::move(docs);
  }
  return out;
}

json to_json(std::span<const ScoreReport> reports) {
  if (reports.size() == 1) return to_json(reports.front());
  json out = json::array();
  for (const ScoreReport& report : reports) out.push_back(to_json(report));
  return out;
}

std::string score_table(std::span<const ScoreReport> reports) {
  std::ostringstream out;
  constexpr std::size_t kLabel = 8;
  constexpr std::size_t kCell = 8;
  out << pad("", kLabel);
  for (const ScoreReport& r : reports) out << "| " << pad(std::string(to_string(r.mode)), 3 * kCell);
  out << '\n' << pad("metric", kLabel);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out << "| " << pad("R", kCell) << pad("P", kCell) << pad("F1", kCell);
  }
  out << '\n';

  struct Row {
    const char* name;
    const Prf MetricScores::*metric;
  };
  const Row rows[] = {{"MUC", &MetricScores::muc},
                      {"B3", &MetricScores::b3},
                      {"CEAFe", &MetricScores::ceafe},
                      {"LEA", &MetricScores::lea}};
  for (const Row& row : rows) {
    out << pad(row.name, kLabel);
    for (const ScoreReport& r : reports) {
      const Prf& prf = r.scores.*row.metric;
      out << "| " << pad(fixed(100 * prf.recall, 2), kCell) << pad(fixed(100 * prf.precision, 2), kCell)
          << pad(fixed(100 * prf.f1, 2), kCell);
    }
    out << '\n';
  }
  out << pad("CoNLL", kLabel);
  for (const ScoreReport& r : reports) {
    out << "| " << pad("", 2 * kCell) << pad(fixed(100 * r.scores.conll, 2), kCell);
  }
  out << '\n';
  return out.str();
}

void write_extract_tsv(std::ostream& out, const std::vector<DocumentAnalysis>& analyses,
                       bool heads) {
  out << "doc_id\tpart\tsentence\tmax_span\tmin_span\tfallback\tunits\n";
  for (const DocumentAnalysis& doc : analyses) {
    for (const MentionAnalysis& m : doc.mentions) {
      out << m.mention.doc_id << '\t' << m.mention.part << '\t' << m.mention.sentence_index << '\t'
          << to_string(m.mention.span) << '\t';
      if (heads) {
        out << m.head.token_index << '\t' << (m.head.rule_fired == HeadRule::NonNPFallback ? 1 : 0)
            << '\t' << to_string(m.head.rule_fired) << '\n';
        continue;
      }
      out << join(m.mina.token_indices) << '\t' << (m.mina.used_fallback ? 1 : 0) << '\t';
      if (m.mina.units.empty()) out << '-';
      for (std::size_t u = 0; u < m.mina.units.size(); ++u) {
        if (u) out << ',';
        out << m.mina.units[u].label << ':' << to_string(m.mina.units[u].span);
      }
      out << '\n';
    }
  }
}

json extract_json(const std::vector<DocumentAnalysis>& analyses, bool heads) {
  json rows = json::array();
  for (const DocumentAnalysis& doc : analyses) {
    for (const MentionAnalysis& m : doc.mentions) {
      json row = mention_json(m.mention);
      if (heads) {
        row["min_span"] = {m.head.token_index};
        row["fallback"] = m.head.rule_fired == HeadRule::NonNPFallback;
        row["rule"] = std::string(to_string(m.head.rule_fired));
      } else {
        row["min_span"] = m.mina.token_indices;
        row["fallback"] = m.mina.used_fallback;
        json units = json::array();
        for (const MinUnit& u : m.mina.units) {
          units.push_back({{"label", u.label}, {"span", to_string(u.span)}, {"depth", u.token_depth}});
        }
        row["units"] = std::move(units);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

json to_json(const CorpusStats& stats) {
  const LengthStats& l = stats.lengths;
  json out = {{"mentions", l.mention_count},
              {"mean_max_len", l.mean_max_len},
              {"mean_min_len", l.mean_min_len},
              {"histogram_max", l.histogram_max},
              {"histogram_min", l.histogram_min},
              {"fallbacks", l.fallback_count},
              {"warnings", l.warnings}};
  if (stats.containment) {
    const ContainmentStats& c = *stats.containment;
    json mismatches = json::array();
    for (const ContainmentMismatch& m : c.mina_mismatches) {
      json row = mention_json(m.mention);
      row["mina"] = m.extracted;
      row["min"] = to_string(m.min);
      mismatches.push_back(std::move(row));
    }
    out["containment"] = {{"aligned", c.aligned},
                          {"mina_contains_min", c.mina_contains_min_ratio},
                          {"head_contains_min", c.head_contains_min_ratio},
                          {"mina_mismatches", std::move(mismatches)},
                          {"warnings", c.warnings}};
  }
  json violations = json::array();
  for (const DistinctnessViolation& v : stats.violations) {
    violations.push_back({{"kind", v.kind == DistinctnessViolation::Kind::Mina ? "mina" : "head"},
                          {"first", mention_json(v.first)},
                          {"second", mention_json(v.second)},
                          {"tokens", v.tokens}});
  }
  out["overlap_collisions"] = std::move(violations);
  return out;
}

std::string stats_table(const CorpusStats& stats) {
  const LengthStats& l = stats.lengths;
  std::ostringstream out;
  constexpr std::size_t kLabel = 22;
  constexpr std::size_t kCell = 10;
  out << pad("", kLabel) << pad("max", kCell) << pad("MINA", kCell) << '\n';
  out << pad("mean length", kLabel) << pad(fixed(l.mean_max_len, 1), kCell)
      << pad(fixed(l.mean_min_len, 1), kCell) << '\n';
  const char* bins[] = {"length 1", "length 2", "length 3", "length >=4"};
  for (std::size_t b = 0; b < 4; ++b) {
    out << pad(bins[b], kLabel) << pad(std::to_string(l.histogram_max[b]), kCell)
        << pad(std::to_string(l.histogram_min[b]), kCell) << '\n';
  }
  out << pad("mentions", kLabel) << l.mention_count << '\n';
  out << pad("MINA fallbacks", kLabel) << l.fallback_count << '\n';

  if (stats.containment) {
    const ContainmentStats& c = *stats.containment;
    out << '\n' << pad("contains MIN (%)", kLabel) << pad("MINA", kCell) << pad("head", kCell) << '\n';
    out << pad("", kLabel) << pad(fixed(c.mina_contains_min_ratio, 1), kCell)
        << pad(fixed(c.head_contains_min_ratio, 1), kCell) << '\n';
    out << pad("aligned MIN rows", kLabel) << c.aligned << '\n';
  }

  long long mina = 0;
  long long head = 0;
  for (const DistinctnessViolation& v : stats.violations) {
    (v.kind == DistinctnessViolation::Kind::Mina ? mina : head) += 1;
  }
  out << '\n' << pad("overlapping pairs", kLabel) << pad("MINA", kCell) << pad("head", kCell) << '\n';
  out << pad("with equal span", kLabel) << pad(std::to_string(mina), kCell)
      << pad(std::to_string(head), kCell) << '\n';
  return out.str();
}

json to_json(const std::vector<BoundaryMismatch>& mismatches) {
  json out = json::array();
  for (const BoundaryMismatch& m : mismatches) {
    out.push_back({{"doc_id", m.key.doc_id},
                   {"part", m.key.part},
                   {"sentence", m.key.sentence_index},
                   {"key_span", to_string(m.key.span)},
                   {"sys_span", to_string(m.sys.span)},
                   {"min_span", m.min_tokens},
                   {"key_text", m.key_text},
                   {"sys_text", m.sys_text}});
  }
  return out;
}

void write_mismatch_tsv(std::ostream& out, const std::vector<BoundaryMismatch>& mismatches) {
  out << "doc_id\tpart\tsentence\tkey_span\tsys_span\tmin_span\tkey_text\tsys_text\n";
  for (const BoundaryMismatch& m : mismatches) {
    out << m.key.doc_id << '\t' << m.key.part << '\t' << m.key.sentence_index << '\t'
        << to_string(m.key.span) << '\t' << to_string(m.sys.span) << '\t' << join(m.min_tokens)
        << '\t' << m.key_text << '\t' << m.sys_text << '\n';
  }
}

std::string mismatch_text(const std::vector<BoundaryMismatch>& mismatches) {
  std::ostringstream out;
  for (const BoundaryMismatch& m : mismatches) {
    out << m.key.doc_id << " part " << m.key.part << " sentence " << m.key.sentence_index << '\n'
        << "  key [" << to_string(m.key.span) << "] " << m.key_text << '\n'
        << "  sys [" << to_string(m.sys.span) << "] " << m.sys_text << '\n';
  }
  out << mismatches.size() << " boundary mismatch(es) with equal MINA spans\n";
  return out.str();
}

}  // namespace minspan
