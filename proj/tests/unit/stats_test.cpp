#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "minspan/compare.hpp"
#include "minspan/error.hpp"
#include "minspan/stats.hpp"

using namespace minspan;

namespace {

const TagPolicy kPolicy = TagPolicy::defaults();

std::vector<DocumentAnalysis> analyze(const std::vector<fixtures::DocSpec>& specs) {
  return analyze_corpus(fixtures::documents(specs), kPolicy, HeadOptions::defaults());
}

}  // namespace

TEST_CASE("length of an unsplit terminal NP") {
  const auto stats = length_stats(analyze({{"c", 0, {"(TOP (NP (DT the) (NN cat)))"}, {{0, 0, 1, 1}}}}));
  CHECK(stats.mention_count == 1);
  CHECK(stats.mean_max_len == doctest::Approx(2.0));
  CHECK(stats.mean_min_len == doctest::Approx(2.0));
  CHECK(stats.histogram_max[1] == 1);
  CHECK(stats.histogram_min[1] == 1);
  CHECK(stats.warnings.empty());
}

TEST_CASE("empty corpus") {
  const auto stats = length_stats(std::vector<DocumentAnalysis>{});
  CHECK(stats.mention_count == 0);
  CHECK(stats.mean_max_len == 0.0);
  CHECK(stats.warnings.size() == 1);
}

TEST_CASE("histogram bins and fallbacks") {
  const auto docs = fixtures::documents({fixtures::conjunction_doc(), fixtures::containment_doc()});
  const auto stats = length_stats(docs, kPolicy);
  // Max lengths: 3 1 1 1 9 4 2 2 | 8 7 ; MINA lengths: 2 1 1 1 8 4 2 2 | 3 1
  CHECK(stats.mention_count == 10);
  CHECK(stats.histogram_max == std::array<long long, 4>{3, 2, 1, 4});
  CHECK(stats.histogram_min == std::array<long long, 4>{4, 3, 1, 2});
  CHECK(stats.mean_max_len == doctest::Approx(3.8));
  CHECK(stats.mean_min_len == doctest::Approx(2.5));
  CHECK(stats.fallback_count == 0);
}

TEST_CASE("random corpora: MINA is never longer on average") {
  gen::Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto docs = fixtures::documents({gen::random_document(rng, "r", 6)});
    const auto stats = length_stats(docs, kPolicy);
    CHECK(stats.mean_min_len <= stats.mean_max_len);
  }
}

TEST_CASE("containment of annotated MIN") {
  const auto docs = fixtures::documents({fixtures::containment_doc()});
  const auto c = containment_stats(docs, fixtures::containment_annotations(), kPolicy);
  CHECK(c.aligned == 2);
  CHECK(c.mina_contained == 1);  // "many" inside {many, big, companies}; "attendants" missed
  CHECK(c.head_contained == 1);  // "companies" misses "many"; fallback head hits "attendants"
  CHECK(c.mina_contains_min_ratio == doctest::Approx(50.0));
  CHECK(c.head_contains_min_ratio == doctest::Approx(50.0));
  REQUIRE(c.mina_mismatches.size() == 1);
  CHECK(c.mina_mismatches[0].mention.sentence_index == 1);
  REQUIRE(c.head_mismatches.size() == 1);
  CHECK(c.head_mismatches[0].mention.sentence_index == 0);
  CHECK(c.warnings.empty());

  TagPolicy corrupted = kPolicy;
  corrupted.np_tags = {"NP"};
  const auto worse = containment_stats(docs, fixtures::containment_annotations(), corrupted);
  CHECK(c.mina_contains_min_ratio >= worse.mina_contains_min_ratio);
}

TEST_CASE("fallback span contains a full-span MIN; unaligned rows are excluded") {
  const auto docs = fixtures::documents({{"f", 0, {"(TOP (ADJP (JJ ours)))"}, {{0, 0, 0, 1}}}});
  MinAnnotations a;
  a.add({"f", 0, 0, {0, 0}, {0, 0}});
  a.add({"f", 0, 0, {1, 1}, {1, 1}});
  const auto c = containment_stats(docs, a, kPolicy);
  CHECK(c.aligned == 1);
  CHECK(c.mina_contains_min_ratio == doctest::Approx(100.0));
  CHECK(c.warnings.size() == 1);
}

TEST_CASE("overlapping mentions: distinct MINA, colliding heads") {
  const auto v = overlap_distinctness(analyze({fixtures::conjunction_doc()}));
  long long mina = 0;
  long long head = 0;
  for (const auto& x : v) (x.kind == DistinctnessViolation::Kind::Mina ? mina : head) += 1;
  CHECK(mina == 0);
  CHECK(head >= 2);  // John and Mary / John; the three names / Joran Van Der Sloot
}

TEST_CASE("no overlap, no report") {
  CHECK(overlap_distinctness(analyze({fixtures::containment_doc()})).empty());
  // "the cat" twice, disjoint.
  const auto twice = analyze({{"t", 0,
                               {"(TOP (S (NP (DT the) (NN cat)) (VP (VBD saw) (NP (DT the) (NN cat)))))"},
                               {{0, 0, 1, 1}, {0, 3, 4, 1}}}});
  CHECK(overlap_distinctness(twice).empty());
}

TEST_CASE("boundary comparison") {
  const auto key = fixtures::documents({fixtures::presence_key()});
  const auto sys = fixtures::documents({fixtures::presence_sys()});
  const auto pairs = compare_boundaries(key, sys, kPolicy);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].key_text == "an extensive presence");
  CHECK(pairs[0].sys_text == "an extensive presence , of course in this country");
  CHECK(pairs[0].min_tokens == std::vector<int>{4, 5, 6});
  CHECK(compare_boundaries(key, key, kPolicy).empty());

  for (const auto& noise : fixtures::noise_pairs()) {
    CAPTURE(noise.name);
    const auto found = compare_boundaries(fixtures::documents({noise.key}),
                                          fixtures::documents({noise.sys}), kPolicy);
    REQUIRE(found.size() == 1);
    CHECK(found[0].key.span == SpanInterval{noise.key_mention.start, noise.key_mention.end});
    CHECK(found[0].sys.span == SpanInterval{noise.sys_mention.start, noise.sys_mention.end});
  }
}

TEST_CASE("sidecar parsing") {
  std::istringstream in(
      "# doc part sentence max min\n"
      "d\t0\t1\t3-5\t4-4\n"
      "\n"
      "d\t0\t2\t7\t7\n");
  const auto a = MinAnnotations::read(in);
  CHECK(a.rows().size() == 2);
  CHECK(a.find("d", 0, 1, {3, 5}) == SpanInterval{4, 4});
  CHECK(a.find("d", 0, 2, {7, 7}) == SpanInterval{7, 7});
  CHECK_FALSE(a.find("d", 0, 1, {3, 4}));
  CHECK(parse_span("12-14") == SpanInterval{12, 14});

  for (const char* bad : {"d\t0\t1\t3-5\n", "d\tx\t1\t3-5\t4\n", "d\t0\t1\t3-5\t6-6\n",
                          "d\t0\t1\t5-3\t4\n", "d\t0\t1\t3-5a\t4\n"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(MinAnnotations::read(b), Error);
  }
}
