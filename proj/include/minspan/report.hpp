#ifndef MINSPAN_REPORT_HPP
#define MINSPAN_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "minspan/compare.hpp"
#include "minspan/corpus.hpp"
#include "minspan/scoring.hpp"
#include "minspan/stats.hpp"

namespace minspan {

/// Rounds half-up to `decimals` places.
double round_half_up(double value, int decimals);

/// Fraction -> percent with two decimals.
double percent(double fraction);

nlohmann::json to_json(const ScoreReport& report);
nlohmann::json to_json(std::span<const ScoreReport> reports);  // object for one, array for more

/// One row per metric, one R/P/F1 column group per report.
std::string score_table(std::span<const ScoreReport> reports);

void write_extract_tsv(std::ostream& out, const std::vector<DocumentAnalysis>& analyses,
                       bool heads);
nlohmann::json extract_json(const std::vector<DocumentAnalysis>& analyses, bool heads);

struct CorpusStats {
  LengthStats lengths;
  std::optional<ContainmentStats> containment;
  std::vector<DistinctnessViolation> violations;
};

nlohmann::json to_json(const CorpusStats& stats);
std::string stats_table(const CorpusStats& stats);

nlohmann::json to_json(const std::vector<BoundaryMismatch>& mismatches);
void write_mismatch_tsv(std::ostream& out, const std::vector<BoundaryMismatch>& mismatches);
std::string mismatch_text(const std::vector<BoundaryMismatch>& mismatches);

}  // namespace minspan

#endif
