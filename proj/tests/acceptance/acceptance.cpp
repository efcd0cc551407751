// Acceptance gate: one PASS/FAIL/SKIP line per criterion, exit 1 on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "minspan/compare.hpp"
#include "minspan/corpus.hpp"
#include "minspan/mina.hpp"
#include "minspan/report.hpp"
#include "minspan/scoring.hpp"
#include "minspan/stats.hpp"
#include "oracles.hpp"

using namespace minspan;
namespace fs = std::filesystem;

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  std::vector<std::string> failures;
  bool skipped = false;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

bool same_percent(const MetricScores& a, const MetricScores& b) {
  const Prf* x[] = {&a.muc, &a.b3, &a.ceafe, &a.lea};
  const Prf* y[] = {&b.muc, &b.b3, &b.ceafe, &b.lea};
  for (int i = 0; i < 4; ++i) {
    if (percent(x[i]->recall) != percent(y[i]->recall)) return false;
    if (percent(x[i]->precision) != percent(y[i]->precision)) return false;
    if (percent(x[i]->f1) != percent(y[i]->f1)) return false;
  }
  return percent(a.conll) == percent(b.conll);
}

const MatchingMode kModes[] = {MatchingMode::MaxSpan, MatchingMode::MinaSpan,
                               MatchingMode::HeadWord, MatchingMode::MucMin};

MinAnnotations head_sidecar(const std::vector<Document>& docs) {
  MinAnnotations out;
  for (const DocumentAnalysis& doc :
       analyze_corpus(docs, TagPolicy::defaults(), HeadOptions::defaults())) {
    for (const MentionAnalysis& m : doc.mentions) {
      out.add({doc.doc_id, doc.part, m.mention.sentence_index, m.mention.span,
               {m.head.token_index, m.head.token_index}});
    }
  }
  return out;
}

std::vector<fixtures::DocSpec> synthetic_corpus(gen::Rng& rng, const std::string& prefix) {
  std::vector<fixtures::DocSpec> specs;
  std::size_t mentions = 0;
  while (mentions < 50 || specs.size() < 3) {
    specs.push_back(gen::random_document(rng, prefix + std::to_string(specs.size()), 8));
    mentions += specs.back().mentions.size();
  }
  specs.push_back(fixtures::conjunction_doc());
  return specs;
}

void golden_extraction(Check& c) {
  const auto start = Clock::now();
  const TagPolicy policy = TagPolicy::defaults();
  auto expect_span = [&](const std::string& name, const char* tree, SpanInterval span,
                         std::vector<int> want, bool fallback) {
    const ParseNode root = parse_bracketed(tree);
    const ParseNode node = span.start < 0 ? root : mention_subtree(root, span);
    const auto got = extract_min_span(node, policy);
    c.expect(got.token_indices == want && got.used_fallback == fallback,
             name + ": got " + str(got.token_indices));
  };
  constexpr SpanInterval kWhole{-1, -1};
  expect_span("a copy", fixtures::kCopy, kWhole, {0, 1}, false);
  expect_span("new zone", fixtures::kNestedZone, kWhole, {2, 7}, false);
  expect_span("appositive", fixtures::kAppositive, kWhole, {0, 1, 4, 5, 6, 7}, false);
  expect_span("three names", fixtures::kConjunction, kWhole, {0, 1, 2, 3, 4, 5, 7, 8}, false);
  expect_span("presence (gold tree)", fixtures::kPresenceGold, {4, 6}, {4, 5, 6}, false);
  expect_span("presence (system span)", fixtures::kPresenceGold, {4, 12}, {4, 5, 6}, false);
  expect_span("presence (system tree)", fixtures::kPresenceSystem, {4, 12}, {4, 5, 6}, false);
  expect_span("ours", fixtures::kOurs, kWhole, {0}, true);
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
}

EntitySet partition(std::vector<std::vector<int>> groups) {
  EntitySet out;
  for (auto& g : groups) {
    Entity e;
    for (int i : g) e.push_back({"d", 0, 0, {i}});
    out.entities.push_back(e);
  }
  return out;
}

void metric_oracles(Check& c) {
  const auto muc = muc_score(partition({{0, 1, 2, 3}}), partition({{0, 1}, {2, 3}}));
  c.expect(near(muc.recall, 2.0 / 3) && near(muc.precision, 1) && near(muc.f1, 0.8), "MUC hand case");
  const auto b3 = b3_score(partition({{0, 1, 2}}), partition({{0, 1}, {2}}));
  c.expect(near(b3.recall, 5.0 / 9) && near(b3.precision, 1), "B3 split");
  const auto merged = b3_score(partition({{0, 1}, {2, 3}}), partition({{0, 1, 2, 3}}));
  c.expect(near(merged.recall, 1) && near(merged.precision, 0.5), "B3 merge");
  const auto lea = lea_score(partition({{0, 1, 2, 3}}), partition({{0, 1}, {2, 3}}));
  c.expect(near(lea.recall, 1.0 / 3) && near(lea.precision, 1), "LEA hand case");

  gen::Rng rng(7);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto key = gen::random_partition(rng, 10, 6, 0.85);
    const auto resp = gen::random_partition(rng, 10, 6, 0.85);
    const auto got = ceafe_score(key, resp);
    const auto want = oracle::ceafe(key, resp);
    if (!near(got.recall, want.recall.value()) || !near(got.precision, want.precision.value())) {
      ++mismatches;
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + "/200 CEAF_e partitions off the optimum");
}

void self_score(Check& c) {
  gen::Rng rng(31);
  for (int corpus = 0; corpus < 3; ++corpus) {
    const auto docs = fixtures::documents(synthetic_corpus(rng, "c" + std::to_string(corpus) + "-"));
    std::size_t mentions = 0;
    for (const auto& d : docs) mentions += d.mentions().size();
    c.expect(mentions >= 50, "corpus " + std::to_string(corpus) + " has " + std::to_string(mentions) + " mentions");
    const MinAnnotations sidecar = head_sidecar(docs);
    ScoringOptions options;
    options.min_annotations = &sidecar;
    for (MatchingMode mode : kModes) {
      const auto s = score_all(docs, docs, mode, options).scores;
      for (const Prf* p : {&s.muc, &s.b3, &s.ceafe, &s.lea}) {
        c.expect(percent(p->recall) == 100.0 && percent(p->precision) == 100.0 &&
                     percent(p->f1) == 100.0,
                 "corpus " + std::to_string(corpus) + " mode " + std::string(to_string(mode)));
      }
    }
  }
}

void gold_mention_equivalence(Check& c) {
  gen::Rng rng(47);
  int head_collisions = 0;
  int mina_collisions = 0;  // nested NPs can share a MINA span; both sides revert alike
  for (int trial = 0; trial < 5; ++trial) {
    const auto key_specs = synthetic_corpus(rng, "g" + std::to_string(trial) + "-");
    std::vector<fixtures::DocSpec> sys_specs;
    for (const auto& spec : key_specs) sys_specs.push_back(gen::recluster(rng, spec));
    const auto key = fixtures::documents(key_specs);
    const auto sys = fixtures::documents(sys_specs);
    const auto max = score_all(key, sys, MatchingMode::MaxSpan);
    const auto mina = score_all(key, sys, MatchingMode::MinaSpan);
    const auto head = score_all(key, sys, MatchingMode::HeadWord);
    c.expect(same_percent(max.scores, mina.scores), "trial " + std::to_string(trial) + ": max != mina");
    if (!mina.warnings.empty()) ++mina_collisions;
    if (!head.warnings.empty()) ++head_collisions;
    c.expect(same_percent(max.scores, head.scores) || !head.warnings.empty(),
             "trial " + std::to_string(trial) + ": head differs without a collision warning");
  }
  c.note = std::to_string(head_collisions) + "/5 trials with head collisions, " +
           std::to_string(mina_collisions) + "/5 with MINA collisions";
}

void boundary_noise(Check& c) {
  const TagPolicy policy = TagPolicy::defaults();
  std::vector<fixtures::DocSpec> all_key;
  std::vector<fixtures::DocSpec> all_sys;
  for (const auto& pair : fixtures::noise_pairs()) {
    const auto key = fixtures::documents({pair.key});
    const auto sys = fixtures::documents({pair.sys});
    const auto max = score_all(key, sys, MatchingMode::MaxSpan).scores;
    const auto mina = score_all(key, sys, MatchingMode::MinaSpan).scores;
    c.expect(mina.muc.f1 > max.muc.f1, pair.name + ": MUC");
    c.expect(mina.b3.f1 > max.b3.f1, pair.name + ": B3");
    c.expect(mina.ceafe.f1 > max.ceafe.f1, pair.name + ": CEAF_e");
    c.expect(mina.lea.f1 > max.lea.f1, pair.name + ": LEA");
    all_key.push_back(pair.key);
    all_sys.push_back(pair.sys);
  }

  const auto found = compare_boundaries(fixtures::documents(all_key), fixtures::documents(all_sys), policy);
  std::set<std::tuple<std::string, int, int, int, int>> want;
  for (const auto& pair : fixtures::noise_pairs()) {
    want.insert({pair.name, pair.key_mention.start, pair.key_mention.end, pair.sys_mention.start,
                 pair.sys_mention.end});
  }
  std::set<std::tuple<std::string, int, int, int, int>> got;
  for (const auto& m : found) {
    got.insert({m.key.doc_id, m.key.span.start, m.key.span.end, m.sys.span.start, m.sys.span.end});
  }
  c.expect(found.size() == want.size() && got == want,
           "compare listed " + std::to_string(found.size()) + " mismatches, expected " +
               std::to_string(want.size()));
}

void tree_properties(Check& c) {
  const auto start = Clock::now();
  const TagPolicy policy = TagPolicy::defaults();
  gen::Rng rng(5);
  int bad = 0;
  std::string first;
  auto fail = [&](int i, const std::string& what) {
    if (bad++ == 0) first = "tree " + std::to_string(i) + ": " + what;
  };
  for (int i = 0; i < 1000; ++i) {
    const ParseNode tree = parse_bracketed(gen::random_tree(rng, 40));
    const auto r = extract_min_span(tree, policy);
    const SpanInterval max = subtree_span(tree);
    if (r.token_indices.empty()) {
      fail(i, "empty");
      continue;
    }
    if (!max.contains(SpanInterval{r.token_indices.front(), r.token_indices.back()})) fail(i, "outside max span");
    for (const MinUnit& u : r.units) {
      if (u.token_depth != r.units.front().token_depth) fail(i, "unequal unit depth");
    }
    if (r.used_fallback != !oracle::has_acceptable_unit(tree, policy)) fail(i, "fallback mismatch");
    if (!r.used_fallback) {
      const auto reachable = oracle::reachable_words(tree, policy);
      for (int t : r.token_indices) {
        if (!reachable.count(t)) fail(i, "token behind an opaque constituent");
      }
    }
    const std::set<int> keep(r.token_indices.begin(), r.token_indices.end());
    if (extract_min_span(oracle::prune(tree, keep), policy).token_indices != r.token_indices) {
      fail(i, "not idempotent");
    }
  }
  c.expect(bad == 0, std::to_string(bad) + " violations, first " + first);
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
}

void distinctness(Check& c) {
  const auto docs = fixtures::documents({fixtures::conjunction_doc()});
  const auto v = overlap_distinctness(docs, TagPolicy::defaults());
  int mina = 0;
  int head = 0;
  for (const auto& x : v) (x.kind == DistinctnessViolation::Kind::Mina ? mina : head) += 1;
  c.expect(mina == 0, std::to_string(mina) + " MINA collisions");
  c.expect(head >= 1, "no head collision");
  c.note = std::to_string(head) + " head collisions";
}

std::vector<Document> read_corpus(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.ends_with("gold_conll")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<Document> docs;
  for (const auto& file : files) {
    std::ifstream in(file);
    for (auto& d : read_conll(in)) docs.push_back(std::move(d));
  }
  return docs;
}

void corpus_check(Check& c) {
  const char* dev = std::getenv("MINSPAN_CONLL_DEV");
  if (!dev || !*dev || !fs::exists(dev)) {
    c.skipped = true;
    c.note = "set MINSPAN_CONLL_DEV to a CoNLL-2012 dev file or directory";
    return;
  }
  const auto docs = read_corpus(dev);
  if (docs.empty()) {
    c.expect(false, std::string("no documents read from ") + dev);
    return;
  }
  const auto stats = length_stats(docs, TagPolicy::defaults());
  c.expect(std::fabs(stats.mean_max_len - 2.4) <= 0.05, "mean max length " + std::to_string(stats.mean_max_len));
  c.expect(std::fabs(stats.mean_min_len - 1.6) <= 0.05, "mean MINA length " + std::to_string(stats.mean_min_len));
  const std::array<long long, 4> want_max{11125, 3820, 1499, 2712};
  const std::array<long long, 4> want_min{11684, 4866, 1828, 778};
  auto hist = [](const std::array<long long, 4>& h) {
    return std::to_string(h[0]) + "/" + std::to_string(h[1]) + "/" + std::to_string(h[2]) + "/" + std::to_string(h[3]);
  };
  c.expect(stats.histogram_max == want_max, "max histogram " + hist(stats.histogram_max));
  c.expect(stats.histogram_min == want_min, "MINA histogram " + hist(stats.histogram_min));
  c.expect(stats.fallback_count == 14, "fallbacks " + std::to_string(stats.fallback_count));
}

void format_fidelity(Check& c) {
  std::vector<fixtures::DocSpec> specs{fixtures::presence_key(), fixtures::presence_sys(),
                                       fixtures::conjunction_doc(), fixtures::containment_doc()};
  for (const auto& pair : fixtures::noise_pairs()) specs.push_back(pair.key);
  const auto docs = fixtures::documents(specs);
  std::ostringstream out;
  write_conll(out, docs);
  const auto again = fixtures::read(out.str());
  bool equal = again.size() == docs.size();
  for (std::size_t i = 0; equal && i < docs.size(); ++i) equal = same_content(docs[i], again[i]);
  c.expect(equal, "read -> emit -> read changed a fixture document");

  gen::Rng rng(101);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const std::string tree = "(TOP " + gen::random_tree(rng, 40) + ")";
    const auto read = fixtures::documents({{"r", 0, {tree}, {}}});
    const auto& sentence = read.at(0).sentences.at(0);
    if (!sentence.tree || *sentence.tree != parse_bracketed(tree) ||
        reconstruct_tree(sentence.tokens) != parse_bracketed(tree)) {
      ++bad;
    }
  }
  c.expect(bad == 0, std::to_string(bad) + "/100 reconstructions differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"golden extraction", golden_extraction},
      {"metric oracles", metric_oracles},
      {"self-score identity", self_score},
      {"gold-mention equivalence", gold_mention_equivalence},
      {"boundary-noise robustness", boundary_noise},
      {"random-tree properties", tree_properties},
      {"distinctness audit", distinctness},
      {"corpus length statistics", corpus_check},
      {"format fidelity", format_fidelity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const char* verdict = c.skipped ? "SKIP" : c.failures.empty() ? "PASS" : "FAIL";
    std::cout << verdict << ' ' << i + 1 << ' ' << criteria[i].first;
    if (!c.failures.empty()) {
      ++failed;
      std::cout << " (";
      const std::size_t shown = std::min<std::size_t>(3, c.failures.size());
      for (std::size_t f = 0; f < shown; ++f) std::cout << (f ? "; " : "") << c.failures[f];
      if (c.failures.size() > shown) std::cout << "; +" << c.failures.size() - shown << " more";
      std::cout << ')';
    } else if (!c.note.empty()) {
      std::cout << " (" << c.note << ')';
    }
    std::cout << '\n';
  }
  return failed == 0 ? 0 : 1;
}
