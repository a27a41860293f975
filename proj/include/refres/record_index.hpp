// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refres/corpus.hpp"

namespace refres {

struct YearRange {
  int first = 0;
  int last = 0;
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// Immutable view of the bibliographic database, ordered by bibcode text.
///
/// Besides the bibcode table it keeps the projections the matcher needs:
/// volume <-> year per bibstem, records per (bibstem, volume) sorted by first
/// page, and the (initial, year) blocks used for theses and monographs.
class RecordIndex {
 public:
  RecordIndex() = default;
  /// Throws Error on a duplicate bibcode or an invalid record.
  explicit RecordIndex(std::vector<BibRecord> records);

  std::size_t size() const { return records_.size(); }
  const std::vector<BibRecord>& records() const { return records_; }

  const BibRecord* lookup(std::string_view bibcode_text) const;
  /// Every record whose bibcode agrees with `bibcode_text` on the first 18
  /// characters, i.e. differing at most in the author initial.
  std::vector<const BibRecord*> lookup_first_author_wildcard(std::string_view bibcode_text) const;

  std::optional<YearRange> year_for_volume(std::string_view bibstem, int volume) const;
  std::set<int> volumes_for_year(std::string_view bibstem, int year) const;

  /// Records of one volume, ordered by first page.
  std::vector<const BibRecord*> volume_records(std::string_view bibstem, int volume) const;
  std::vector<const BibRecord*> by_initial_year(char initial, int year) const;

 private:
  std::vector<BibRecord> records_;
  std::map<std::string, std::size_t, std::less<>> by_bibcode_;
  std::map<std::string, std::map<int, YearRange>, std::less<>> volume_year_;
  std::map<std::string, std::map<int, std::set<int>>, std::less<>> year_volume_;
  std::map<std::pair<std::string, int>, std::vector<std::size_t>> by_volume_;
  std::map<std::pair<char, int>, std::vector<std::size_t>> by_initial_year_;
};

}  // namespace refres
