// Serial vs. parallel scoring and extraction on a synthetic corpus.
// Worker count follows MINSPAN_THREADS.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "minspan/corpus.hpp"
#include "minspan/scoring.hpp"

using namespace minspan;

namespace {

struct Corpus {
  std::vector<Document> key;
  std::vector<Document> sys;
};

const Corpus& corpus(int documents) {
  static std::map<int, Corpus> cache;
  auto it = cache.find(documents);
  if (it != cache.end()) return it->second;
  gen::Rng rng(17);
  std::vector<fixtures::DocSpec> key;
  std::vector<fixtures::DocSpec> sys;
  for (int d = 0; d < documents; ++d) {
    key.push_back(gen::random_document(rng, "b" + std::to_string(d), 20));
    sys.push_back(gen::recluster(rng, key.back()));
  }
  return cache.emplace(documents, Corpus{fixtures::documents(key), fixtures::documents(sys)})
      .first->second;
}

void score(benchmark::State& state, Execution execution, MatchingMode mode) {
  const Corpus& c = corpus(static_cast<int>(state.range(0)));
  ScoringOptions options;
  options.execution = execution;
  for (auto _ : state) benchmark::DoNotOptimize(score_all(c.key, c.sys, mode, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["workers"] = execution == Execution::Parallel ? worker_count() : 1;
}

void reference(benchmark::State& state, MatchingMode mode) {
  const Corpus& c = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(score_all_reference(c.key, c.sys, mode));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void extract(benchmark::State& state, Execution execution) {
  const Corpus& c = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analyze_corpus(c.key, TagPolicy::defaults(), HeadOptions::defaults(), execution));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["workers"] = execution == Execution::Parallel ? worker_count() : 1;
}

}  // namespace

BENCHMARK_CAPTURE(score, mina_serial, Execution::Serial, MatchingMode::MinaSpan)->Arg(16)->Arg(128)->UseRealTime();
BENCHMARK_CAPTURE(score, mina_parallel, Execution::Parallel, MatchingMode::MinaSpan)->Arg(16)->Arg(128)->UseRealTime();
// One corpus-wide CEAF assignment, cubic in entities: kept small.
BENCHMARK_CAPTURE(reference, mina, MatchingMode::MinaSpan)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK_CAPTURE(score, max_serial, Execution::Serial, MatchingMode::MaxSpan)->Arg(128)->UseRealTime();
BENCHMARK_CAPTURE(score, max_parallel, Execution::Parallel, MatchingMode::MaxSpan)->Arg(128)->UseRealTime();
BENCHMARK_CAPTURE(extract, serial, Execution::Serial)->Arg(128)->UseRealTime();
BENCHMARK_CAPTURE(extract, parallel, Execution::Parallel)->Arg(128)->UseRealTime();

BENCHMARK_MAIN();
