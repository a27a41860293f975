// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "refres/authority.hpp"
#include "refres/confusion.hpp"
#include "refres/corpus.hpp"
#include "refres/fielding.hpp"
#include "refres/heuristics.hpp"
#include "refres/matching.hpp"
#include "refres/record_index.hpp"

namespace refres {

struct ResolverConfig {
  std::size_t n_best = 5;
  std::set<StageId> enabled_stages{StageId::S1, StageId::S2, StageId::S3, StageId::S4, StageId::S5};
  /// Final pass with wildcard initials, confused page digits, other qualifiers.
  bool enable_relaxed = true;
  /// Serial rules beyond the exact bibcode (year/volume reconstruction, page
  /// neighborhood, swaps, letter sections).
  bool enable_relaxations = true;
  bool enable_monograph = true;
  double serial_da = 0.0;
  double special_da = 0.5;

  /// Applies `key = value` settings; throws Error on unknown keys or bad
  /// values (n_best must be at least 1).
  void apply(const std::map<std::string, std::string>& values);
  static ResolverConfig load(const std::string& path);

  MatchOptions match_options() const { return {serial_da, special_da, enable_relaxations}; }
};

/// Everything loaded once and shared read-only by all workers.
struct ResolverContext {
  const RecordIndex& index;
  const AuthorityTable& authority;
  const TemplateSet& templates;
  const Heuristics& heuristics;
  const ConfusionTable& confusions;
};

/// Owns the loaded inputs behind a ResolverContext. Not movable: the
/// heuristics keep a pointer to the authority table.
class ResolverData {
 public:
  ResolverData(TemplateSet templates, AuthorityTable authority, std::vector<BibRecord> records,
               CorrectionTables corrections, ConfusionTable confusions = ConfusionTable::defaults());
  ResolverData(const ResolverData&) = delete;
  ResolverData& operator=(const ResolverData&) = delete;

  ResolverContext context() const { return {index, authority, templates, heuristics, confusions}; }

  TemplateSet templates;
  AuthorityTable authority;
  RecordIndex index;
  Heuristics heuristics;
  ConfusionTable confusions;
};

class Resolver {
 public:
  Resolver(ResolverContext context, ResolverConfig config);

  /// Core loop (year, thesis keyword, n-best heads, slot filling, serial
  /// match), then each enabled repair stage with the core loop re-run after
  /// it, then monographs, then the relaxed pass.
  ResolutionOutcome resolve_one(const NoisyReference& ref) const;

  /// Normalizes, expands backreferences, resolves each entry (on `jobs`
  /// threads). Output order equals input order.
  std::vector<ResolutionOutcome> resolve_corpus(std::vector<NoisyReference> refs, unsigned jobs = 1) const;

  const ResolverConfig& config() const { return config_; }

 private:
  struct Attempt;
  bool attempt(const std::string& s, const std::string& stage, Attempt& state, ResolutionOutcome& out) const;

  ResolverContext ctx_;
  ResolverConfig config_;
};

}  // namespace refres
