// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "refres/error.hpp"

namespace refres {

struct AuthorityEntry {
  /// Folded form used for scoring ("astrophys j").
  std::string variant;
  /// The variant as written in the authority file ("Astrophys. J.").
  std::string display;
  std::string bibstem;
  std::string template_name;
};

struct SourceMatch {
  const AuthorityEntry* entry = nullptr;
  /// Lower is better; an exact variant scores 1.0.
  double score = 0.0;
  int trigram_overlap = 0;
  int levenshtein = 0;
};

class InvalidHeadError : public Error {
 public:
  using Error::Error;
};

/// Number of length-3 windows of `h`, counted with multiplicity, that occur
/// somewhere in `a`. Zero when `h` is shorter than three characters.
int trigram_overlap(std::string_view a, std::string_view h);

/// 1 - ((overlap(a,h) - |a|) * lev(a,h)) / |h|. Throws InvalidHeadError for an
/// empty head.
double source_similarity(std::string_view a, std::string_view h);

/// Same formula from precomputed parts.
double source_similarity(int overlap, std::size_t a_length, std::size_t lev, std::size_t h_length);

/// Ranking used everywhere candidate sources are ordered: exact variants
/// first, then score, shorter variant, bibstem, variant.
bool source_ranks_before(const SourceMatch& x, const SourceMatch& y, std::string_view folded_head);

class AuthorityTable {
 public:
  AuthorityTable() = default;
  explicit AuthorityTable(std::vector<AuthorityEntry> entries);

  AuthorityTable(const AuthorityTable&) = delete;
  AuthorityTable& operator=(const AuthorityTable&) = delete;
  AuthorityTable(AuthorityTable&&) = default;
  AuthorityTable& operator=(AuthorityTable&&) = default;

  const std::vector<AuthorityEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// The `n` best sources for a head, at most one per bibstem. Levenshtein
  /// scoring is restricted to entries sharing at least half as many trigrams
  /// with the head as the best-overlapping entry; heads under three
  /// characters are scored against every entry.
  std::vector<SourceMatch> n_best_sources(std::string_view head, std::size_t n) const;

 private:
  std::vector<AuthorityEntry> entries_;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> postings_;
};

}  // namespace refres
