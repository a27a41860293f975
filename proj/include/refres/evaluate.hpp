// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refres/corpus.hpp"

namespace refres {

/// Ground truth for one generated reference. No bibcode means the target
/// was withheld from the database, so the correct answer is "unresolved".
struct GoldEntry {
  std::string id;
  std::optional<Bibcode> bibcode;
  std::vector<std::string> labels;

  friend bool operator==(const GoldEntry&, const GoldEntry&) = default;
};

/// `id<TAB>bibcode or -<TAB>label,label,...`
void write_gold(std::ostream& out, const std::vector<GoldEntry>& gold);
void write_gold(const std::string& path, const std::vector<GoldEntry>& gold);
std::vector<GoldEntry> read_gold(std::istream& in, const std::string& name);
std::vector<GoldEntry> load_gold(const std::string& path);

struct LabelRecall {
  std::size_t total = 0;
  std::size_t correct = 0;
};

struct EvaluationReport {
  std::size_t references = 0;
  std::size_t resolved = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t gold_in_database = 0;
  std::size_t gold_missing = 0;
  /// Resolved although the gold says the target is not in the database.
  std::size_t false_links = 0;
  /// Gold target in the database but left unresolved.
  std::size_t missed = 0;
  double precision = 1.0;
  double recall = 1.0;
  double false_link_rate = 0.0;
  /// Resolutions per stage ("core", "heuristic-S2", ...) and per full label.
  std::map<std::string, std::size_t> stages;
  std::map<std::string, std::size_t> rules;
  std::map<std::string, std::size_t> unresolved_reasons;
  /// Over references whose target is in the database.
  std::map<std::string, LabelRecall> label_recall;
  std::optional<double> seconds;

  std::optional<double> throughput() const {
    if (!seconds || *seconds <= 0.0) return std::nullopt;
    return static_cast<double>(references) / *seconds;
  }
};

/// precision = correct / resolved (1 when nothing resolved); recall =
/// correct / gold-in-database (1 when there is none); false-link rate =
/// resolved among missing-gold / missing-gold (0 when there is none).
/// Throws Error listing ids present on one side only.
EvaluationReport evaluate(const std::vector<ResolutionOutcome>& results, const std::vector<GoldEntry>& gold);

/// TSV `key<TAB>value`, ratios to 4 places, then `stage.<name>`,
/// `rule.<label>`, `reason.<name>` and `label.<name>.recall` rows.
void write_report(std::ostream& out, const EvaluationReport& report);
void write_report(const std::string& path, const EvaluationReport& report);

}  // namespace refres
