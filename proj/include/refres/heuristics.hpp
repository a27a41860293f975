// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "refres/authority.hpp"

namespace refres {

enum class StageId { S1, S2, S3, S4, S5 };

/// "S1-abbrev", "S2-numerals", ...
std::string_view to_string(StageId id);
/// Accepts "S2" or "S2-numerals".
std::optional<StageId> parse_stage_id(std::string_view text);
constexpr int stage_number(StageId id) { return static_cast<int>(id) + 1; }

enum class CorrectionContext { head_start, in_string, short_head, abbrev };

struct CorrectionRule {
  std::string pattern;
  std::string replacement;
  CorrectionContext context = CorrectionContext::abbrev;
  std::regex compiled;
};

/// The data-driven part of the heuristics, read from a TSV of
/// `pattern<TAB>replacement<TAB>context` lines:
///   abbrev      regex rewrites of misrecognized source abbreviations
///   head-start  letter -> digit at the start of a numeric token
///   in-string   letter -> digit after a digit inside a numeric token
///   short-head  whole-token rewrites of short source names ("A1" -> "AJ")
class CorrectionTables {
 public:
  static CorrectionTables load(const std::string& path);
  static CorrectionTables parse(std::istream& in, const std::string& name);

  /// Throws Error for an invalid regex or a confusion entry that is not a
  /// single letter mapped to a single digit.
  void add(std::string pattern, std::string replacement, CorrectionContext context);

  const std::vector<CorrectionRule>& abbreviations() const { return abbreviations_; }
  const std::vector<CorrectionRule>& short_heads() const { return short_heads_; }
  const std::map<char, char>& head_start() const { return head_start_; }
  const std::map<char, char>& in_string() const { return in_string_; }

 private:
  std::vector<CorrectionRule> abbreviations_;
  std::vector<CorrectionRule> short_heads_;
  std::map<char, char> head_start_;
  std::map<char, char> in_string_;
};

/// The repair stages, from least to most daring. Each rewrite is idempotent
/// and none touches an extractable year except S2 repairing a missing one.
class Heuristics {
 public:
  Heuristics(CorrectionTables tables, const AuthorityTable& authority);

  std::string s1_fix_abbreviations(std::string_view s) const;
  std::string s2_fix_numerals(std::string_view s) const;
  std::string s3_transform_source(std::string_view s) const;
  /// The alphabetic content of the comma/colon-separated part of `rest` that
  /// best matches the authority file; `rest` itself when fewer than two parts
  /// carry letters.
  std::string s4_dissect_source(std::string_view rest) const;
  /// Rebuilds the reference around the dissected head, keeping all fillers.
  std::string s4_rewrite(std::string_view s) const;
  /// Drops a quoted span after the year when the remaining text matches a
  /// source better than the span does.
  std::string s5_remove_title(std::string_view s) const;
  /// Splits a line holding two references at the second "Author, I. Year".
  std::vector<std::string> s5_split(std::string_view s) const;

  std::string rewrite(StageId id, std::string_view s) const;

  const CorrectionTables& tables() const { return tables_; }

 private:
  std::optional<double> best_source_score(std::string_view rest) const;

  CorrectionTables tables_;
  const AuthorityTable* authority_;
};

}  // namespace refres
