// minspan: score, extract, stats and compare over CoNLL-2012 coreference files.
//
// Exit status: 0 on success, 1 on data errors, 2 on usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minspan/compare.hpp"
#include "minspan/conll.hpp"
#include "minspan/corpus.hpp"
#include "minspan/error.hpp"
#include "minspan/report.hpp"
#include "minspan/scoring.hpp"
#include "minspan/sidecar.hpp"
#include "minspan/stats.hpp"

namespace {

using namespace minspan;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string key_path;
  std::string sys_path;
  std::vector<std::string> modes{"max"};
  std::string format = "text";
  std::string min_sidecar;
  std::string head_table;
  std::vector<std::string> np_tags;
  std::vector<std::string> vp_tags;
  std::vector<std::string> excluded_pos;
  bool strict_paper = false;
  bool per_document = false;
  int coref_column = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

void warn(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

std::vector<Document> load(const std::string& path, const RunConfig& config) {
  std::ifstream in = open(path);
  std::vector<std::string> warnings;
  auto docs = read_conll(in, ReadOptions{config.coref_column}, &warnings);
  for (std::string& w : warnings) w = path + ": " + w;
  warn(warnings);
  return docs;
}

TagPolicy policy_of(const RunConfig& config) {
  TagPolicy policy = config.strict_paper ? TagPolicy::strict_paper() : TagPolicy::defaults();
  if (!config.np_tags.empty()) policy.np_tags = {config.np_tags.begin(), config.np_tags.end()};
  if (!config.vp_tags.empty()) policy.vp_tags = {config.vp_tags.begin(), config.vp_tags.end()};
  if (!config.excluded_pos.empty()) {
    policy.excluded_pos = {config.excluded_pos.begin(), config.excluded_pos.end()};
  }
  return policy;
}

HeadOptions heads_of(const RunConfig& config) {
  HeadOptions heads = HeadOptions::defaults();
  if (!config.np_tags.empty()) heads.np_tags = {config.np_tags.begin(), config.np_tags.end()};
  if (!config.head_table.empty()) {
    std::ifstream in = open(config.head_table);
    heads.table = std::make_shared<const HeadTable>(HeadTable::read(in));
  }
  return heads;
}

std::optional<MinAnnotations> sidecar_of(const RunConfig& config) {
  if (config.min_sidecar.empty()) return std::nullopt;
  std::ifstream in = open(config.min_sidecar);
  return MinAnnotations::read(in);
}

std::vector<MatchingMode> modes_of(const RunConfig& config) {
  std::vector<MatchingMode> modes;
  for (const std::string& name : config.modes) {
    auto mode = parse_matching_mode(name);
    if (!mode) throw UsageError("unknown span mode '" + name + "' (max, mina, head, mucmin)");
    modes.push_back(*mode);
  }
  return modes;
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("format '" + config.format + "' not supported by this subcommand");
}

int run_score(const RunConfig& config) {
  require_format(config, {"text", "json"});
  const auto modes = modes_of(config);
  const auto sidecar = sidecar_of(config);
  for (MatchingMode mode : modes) {
    if (mode == MatchingMode::MucMin && !sidecar) {
      throw UsageError("--span mucmin requires --min-sidecar");
    }
  }
  const auto key = load(config.key_path, config);
  const auto sys = load(config.sys_path, config);

  ScoringOptions options;
  options.policy = policy_of(config);
  options.heads = heads_of(config);
  options.min_annotations = sidecar ? &*sidecar : nullptr;
  options.per_document = config.per_document;

  std::vector<ScoreReport> reports;
  for (MatchingMode mode : modes) {
    reports.push_back(score_all(key, sys, mode, options));
    warn(reports.back().warnings);
  }
  if (config.format == "json") {
    std::cout << to_json(std::span<const ScoreReport>(reports)).dump(2) << '\n';
  } else {
    std::cout << score_table(reports);
  }
  return 0;
}

int run_extract(const RunConfig& config) {
  require_format(config, {"text", "tsv", "json"});
  const auto modes = modes_of(config);
  if (modes.size() != 1 || (modes[0] != MatchingMode::MinaSpan && modes[0] != MatchingMode::HeadWord)) {
    throw UsageError("extract takes --span mina or --span head");
  }
  const bool heads = modes[0] == MatchingMode::HeadWord;
  const auto docs = load(config.key_path, config);
  const auto analyses = analyze_corpus(docs, policy_of(config), heads_of(config));
  if (config.format == "json") {
    std::cout << extract_json(analyses, heads).dump(2) << '\n';
  } else {
    write_extract_tsv(std::cout, analyses, heads);
  }
  return 0;
}

int run_stats(const RunConfig& config) {
  require_format(config, {"text", "json"});
  const auto docs = load(config.key_path, config);
  const TagPolicy policy = policy_of(config);
  const HeadOptions heads = heads_of(config);
  const auto analyses = analyze_corpus(docs, policy, heads);

  CorpusStats stats;
  stats.lengths = length_stats(analyses);
  warn(stats.lengths.warnings);
  if (const auto sidecar = sidecar_of(config)) {
    stats.containment = containment_stats(docs, *sidecar, policy, heads);
    warn(stats.containment->warnings);
  }
  stats.violations = overlap_distinctness(analyses);

  if (config.format == "json") {
    std::cout << to_json(stats).dump(2) << '\n';
  } else {
    std::cout << stats_table(stats);
  }
  return 0;
}

int run_compare(const RunConfig& config) {
  require_format(config, {"text", "tsv", "json"});
  const auto key = load(config.key_path, config);
  const auto sys = load(config.sys_path, config);
  const auto mismatches = compare_boundaries(key, sys, policy_of(config));
  if (config.format == "json") {
    std::cout << to_json(mismatches).dump(2) << '\n';
  } else if (config.format == "tsv") {
    write_mismatch_tsv(std::cout, mismatches);
  } else {
    std::cout << mismatch_text(mismatches);
  }
  return 0;
}

void add_policy_flags(CLI::App& cmd, RunConfig& config) {
  cmd.add_flag("--strict-paper", config.strict_paper,
               "exclude only DT and CC; punctuation counts as content");
  cmd.add_option("--np-tags", config.np_tags, "noun phrase tags, comma separated")->delimiter(',');
  cmd.add_option("--vp-tags", config.vp_tags, "verb phrase tags, comma separated")->delimiter(',');
  cmd.add_option("--excluded-pos", config.excluded_pos, "POS tags that never form a minimum span")
      ->delimiter(',');
  cmd.add_option("--head-table", config.head_table, "head rules for non-NP phrases");
}

void add_input_flags(CLI::App& cmd, RunConfig& config, bool with_sys) {
  cmd.add_option("--key", config.key_path, "key CoNLL file")->required()->check(CLI::ExistingFile);
  if (with_sys) {
    cmd.add_option("--sys", config.sys_path, "system CoNLL file")
        ->required()
        ->check(CLI::ExistingFile);
  }
  cmd.add_option("--coref-column", config.coref_column, "1-based coreference column (default: last)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-span coreference evaluation"};
  app.require_subcommand(1);
  RunConfig config;

  auto* score = app.add_subcommand("score", "score a system file against a key file");
  add_input_flags(*score, config, true);
  score->add_option("--span", config.modes, "max, mina, head, mucmin (comma separated)")
      ->delimiter(',');
  score->add_option("--format", config.format, "text or json");
  score->add_option("--min-sidecar", config.min_sidecar, "MIN annotations (TSV)")
      ->check(CLI::ExistingFile);
  score->add_flag("--per-document", config.per_document, "add per-document scores");
  add_policy_flags(*score, config);

  auto* extract = app.add_subcommand("extract", "list the minimum span of every key mention");
  add_input_flags(*extract, config, false);
  extract->add_option("--span", config.modes, "mina or head");
  extract->add_option("--format", config.format, "tsv, text or json");
  add_policy_flags(*extract, config);

  auto* stats = app.add_subcommand("stats", "length, containment and overlap statistics");
  add_input_flags(*stats, config, false);
  stats->add_option("--format", config.format, "text or json");
  stats->add_option("--min-sidecar", config.min_sidecar, "MIN annotations (TSV)")
      ->check(CLI::ExistingFile);
  add_policy_flags(*stats, config);

  auto* compare = app.add_subcommand("compare", "key/system pairs that differ only in boundaries");
  add_input_flags(*compare, config, true);
  compare->add_option("--format", config.format, "text, tsv or json");
  add_policy_flags(*compare, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (extract->parsed()) {
      if (extract->count("--span") == 0) config.modes = {"mina"};
      return run_extract(config);
    }
    if (score->parsed()) return run_score(config);
    if (stats->parsed()) return run_stats(config);
    return run_compare(config);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
