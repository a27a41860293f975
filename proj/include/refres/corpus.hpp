// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refres/bibcode.hpp"
#include "refres/text.hpp"

namespace refres {

/// One raw reference string as it came out of the OCR and reference-zone
/// pipeline.
struct NoisyReference {
  std::string id;
  std::size_t position = 0;
  std::string raw;
  std::string normalized;
  /// Set by expand_backreferences when a "--- ibid." entry had nothing to
  /// refer back to.
  bool orphan_backreference = false;
};

enum class RecordKind { serial, proceedings, monograph, thesis };

std::string_view to_string(RecordKind kind);
std::optional<RecordKind> parse_record_kind(std::string_view text);

/// Kinds whose bibcode is computed from (year, bibstem, volume, page).
inline bool has_bibstem(RecordKind kind) {
  return kind == RecordKind::serial || kind == RecordKind::proceedings;
}

struct BibRecord {
  Bibcode bibcode;
  RecordKind kind = RecordKind::serial;
  std::vector<std::string> author_last_names;
  char first_author_initial = '.';
  int year = 0;
  std::string bibstem;
  int volume = 0;
  int first_page = 0;
  std::optional<int> last_page;
  char qualifier = '.';
  std::string title;
  std::string institution;

  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

/// Throws Error describing the first violated invariant.
void validate_record(const BibRecord& record);

/// Uppercased first letter of a last name, '.' when it does not start with a
/// letter. Leading lowercase particles are skipped: "van de Hulst" -> 'H'.
char initial_of(std::string_view last_name);

enum class ResolutionStatus { resolved, unresolved };

enum class UnresolvedReason { no_year, no_source, no_record, rejected_authors, non_reference };

std::string_view to_string(UnresolvedReason reason);
std::optional<UnresolvedReason> parse_unresolved_reason(std::string_view text);

struct ResolutionOutcome {
  std::string id;
  ResolutionStatus status = ResolutionStatus::unresolved;
  std::optional<Bibcode> bibcode;
  /// "<stage>:<rule>", e.g. "core:exact" or "heuristic-S2:year-from-volume".
  std::string stage;
  std::optional<double> source_score;
  std::optional<double> author_score;
  std::optional<UnresolvedReason> reason;
  /// Number of record fields the accepting match rule altered. Not serialized.
  int fields_changed = 0;

  bool resolved() const { return status == ResolutionStatus::resolved; }

  static ResolutionOutcome unresolved_because(std::string id, UnresolvedReason why) {
    ResolutionOutcome out;
    out.id = std::move(id);
    out.reason = why;
    return out;
  }
};

/// Stage part of "<stage>:<rule>".
std::string stage_name(std::string_view stage_label);

/// Rewrites "---" + "ibid" entries using the nearest preceding full entry:
/// the dash run becomes that entry's author segment and the first "ibid"
/// becomes its source. Entries without an antecedent pass through with
/// orphan_backreference set. Output has the input's length and order.
std::vector<NoisyReference> expand_backreferences(std::vector<NoisyReference> refs);

bool is_backreference(std::string_view normalized);

}  // namespace refres
