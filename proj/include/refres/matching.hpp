// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refres/confusion.hpp"
#include "refres/fielding.hpp"
#include "refres/record_index.hpp"

namespace refres {

/// Cleaned last-name words: lowercase, no initials, no words of two letters
/// or less, no "and"/"et"/"al".
struct AuthorNameSet {
  std::vector<std::string> words;

  /// From the text before the year. Splits on ',', ';' and '&'; a piece whose
  /// first word carries a period is an initials piece ("H. C. van de.") and
  /// is dropped whole.
  static AuthorNameSet from_reference(std::string_view author_segment);
  static AuthorNameSet from_record(const std::vector<std::string>& last_names);
  /// Plain word cleaning, used for titles and institutions.
  static AuthorNameSet from_text(std::string_view text);

  bool empty() const { return words.empty(); }
  /// Uppercased first letter of the first word, '.' if unavailable.
  char initial() const;
};

/// d_a = 1 - fault / limit, where fault sums, over reference words, the
/// smallest Levenshtein distance to any record word, and limit allows 2, 3 or
/// 4 errors for words shorter than 5, shorter than 10, or longer. Returns 0
/// for an empty reference set; throws Error for an empty record set.
double author_distance(const AuthorNameSet& reference_authors, const AuthorNameSet& record_authors);

enum class Field { year, volume, page, qualifier };

struct MatchDecision {
  bool accepted = false;
  const BibRecord* record = nullptr;
  std::set<Field> fields_changed;
  double author_score = 0.0;
  std::string rule;
  /// Some candidate bibcode existed but its authors were rejected.
  bool authors_rejected = false;
};

/// A fielded reference bound to one candidate source.
struct SerialCandidate {
  AuthorNameSet authors;
  char initial = '.';
  int year = 0;
  std::string bibstem;
  /// Absent when the volume has to be derived from the year.
  std::optional<Filler> volume;
  Filler page = 0;

  friend bool operator==(const SerialCandidate& a, const SerialCandidate& b) {
    return a.initial == b.initial && a.year == b.year && a.bibstem == b.bibstem && a.volume == b.volume &&
           a.page == b.page && a.authors.words == b.authors.words;
  }
};

/// Binds slot values to a source; number slots land in the page position
/// with volume 0.
SerialCandidate make_serial_candidate(const AuthorNameSet& authors, int year, std::string_view bibstem,
                                      const SlotAssignment& filled);

struct MatchOptions {
  /// Serial acceptance: author score strictly above this.
  double serial_threshold = 0.0;
  /// Theses and monographs: author (and title) score at least this.
  double special_threshold = 0.5;
  /// Rules beyond the exact lookup: year/volume reconstruction, page
  /// neighborhood, digit swaps, letter sections.
  bool relaxations = true;
};

/// Exact lookup, then year from volume, volume from year, page neighborhood
/// (p +/- 3 and last-page containment), adjacent page-digit swaps, letter
/// section. Stops at the first acceptance; never alters two fields at once.
MatchDecision match_serial(const SerialCandidate& candidate, const RecordIndex& index,
                           const MatchOptions& options = {});

/// match_serial, then the same with any author initial, pages misread through
/// the confusion table, and alternative qualifiers.
MatchDecision relaxed_pass(const SerialCandidate& candidate, const RecordIndex& index,
                           const ConfusionTable& confusions, const MatchOptions& options = {});

/// End of the last thesis keyword in `rest` ("Ph.D. Thesis", "Tbesis", ...).
std::optional<std::size_t> find_thesis_keyword(std::string_view rest);

MatchDecision match_thesis(std::string_view author_segment, int year, std::string_view institution_text,
                           const RecordIndex& index, const MatchOptions& options = {});

MatchDecision match_monograph(std::string_view author_segment, int year, std::string_view head,
                              const RecordIndex& index, const MatchOptions& options = {});

}  // namespace refres
