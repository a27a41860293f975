// SPDX-License-Identifier: Apache-2.0

#include "refres/corpus.hpp"

#include <array>
#include <utility>

namespace refres {

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::serial: return "serial";
    case RecordKind::proceedings: return "proceedings";
    case RecordKind::monograph: return "monograph";
    case RecordKind::thesis: return "thesis";
  }
  return "serial";
}

std::optional<RecordKind> parse_record_kind(std::string_view text) {
  for (auto kind : {RecordKind::serial, RecordKind::proceedings, RecordKind::monograph, RecordKind::thesis}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

char initial_of(std::string_view last_name) {
  // Lowercase particles ("van de Hulst") are skipped when another word
  // follows them.
  std::size_t i = 0;
  for (;;) {
    while (i < last_name.size() && last_name[i] == ' ') ++i;
    std::size_t j = i;
    while (j < last_name.size() && last_name[j] != ' ') ++j;
    if (i >= last_name.size()) return '.';
    std::size_t next = j;
    while (next < last_name.size() && last_name[next] == ' ') ++next;
    const bool particle = last_name[i] >= 'a' && last_name[i] <= 'z' && next < last_name.size();
    if (!particle) break;
    i = next;
  }
  if (!is_alpha(last_name[i])) return '.';
  return static_cast<char>(last_name[i] & ~0x20);
}

void validate_record(const BibRecord& r) {
  const std::string code = r.bibcode.text();
  if (r.author_last_names.empty()) throw Error(code + ": author_last_names is empty");
  if (r.first_author_initial != initial_of(r.author_last_names.front())) {
    throw Error(code + ": first_author_initial does not match author_last_names[0]");
  }
  if (r.year < 1000 || r.year > 9999) throw Error(code + ": year is not 4-digit");
  if (r.first_page < 0) throw Error(code + ": first_page is negative");
  if (r.last_page && *r.last_page < r.first_page) throw Error(code + ": last_page < first_page");
  if (has_bibstem(r.kind)) {
    if (!valid_bibstem(r.bibstem)) throw Error(code + ": invalid bibstem");
    if (r.volume < 0) throw Error(code + ": volume is negative");
    Bibcode expected;
    try {
      expected = build_bibcode(r.year, r.bibstem, r.volume, r.qualifier, r.first_page, r.first_author_initial);
    } catch (const BibcodeError& e) {
      throw Error(code + ": " + e.what());
    }
    if (expected != r.bibcode) {
      throw Error(code + ": bibcode inconsistent with fields (expected " + expected.text() + ")");
    }
  }
}

std::string_view to_string(UnresolvedReason reason) {
  switch (reason) {
    case UnresolvedReason::no_year: return "no-year";
    case UnresolvedReason::no_source: return "no-source";
    case UnresolvedReason::no_record: return "no-record";
    case UnresolvedReason::rejected_authors: return "rejected-authors";
    case UnresolvedReason::non_reference: return "non-reference";
  }
  return "no-record";
}

std::optional<UnresolvedReason> parse_unresolved_reason(std::string_view text) {
  for (auto r : {UnresolvedReason::no_year, UnresolvedReason::no_source, UnresolvedReason::no_record,
                 UnresolvedReason::rejected_authors, UnresolvedReason::non_reference}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

std::string stage_name(std::string_view stage_label) {
  return std::string(stage_label.substr(0, stage_label.find(':')));
}

namespace {

bool year_like(char c) { return is_digit(c) || c == 'o' || c == 'O' || c == 'l' || c == 'I' || c == 'S'; }

// Finds a year token tolerating OCR letter confusions ("195oa"). Returns the
// [begin, end) span including any one-letter suffix.
std::optional<std::pair<std::size_t, std::size_t>> find_year_token(std::string_view s) {
  for (std::size_t i = 0; i + 4 <= s.size(); ++i) {
    if (i > 0 && is_alnum(s[i - 1])) continue;
    int digits = 0;
    bool ok = true;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!year_like(s[i + k])) {
        ok = false;
        break;
      }
      digits += is_digit(s[i + k]) ? 1 : 0;
    }
    if (!ok || digits < 3 || !(s[i] == '1' || s[i] == '2')) continue;
    std::size_t end = i + 4;
    if (end < s.size() && s[end] >= 'a' && s[end] <= 'z') ++end;
    if (end < s.size() && is_alnum(s[end])) continue;
    return std::make_pair(i, end);
  }
  return std::nullopt;
}

bool is_roman(std::string_view word) {
  if (word.empty()) return false;
  for (char c : word) {
    if (c != 'I' && c != 'V' && c != 'X') return false;
  }
  return true;
}

// The leading source designation of a post-year remainder: ", Ap.J. III, 414"
// gives "Ap.J.".
std::string leading_source(std::string_view rest) {
  std::size_t p = 0;
  while (p < rest.size() && !is_alnum(rest[p])) ++p;
  std::string out;
  while (p < rest.size()) {
    std::size_t q = p;
    while (q < rest.size() && rest[q] != ' ') ++q;
    std::string_view word = rest.substr(p, q - p);
    bool stop_after = false;
    if (!word.empty() && (word.back() == ',' || word.back() == ';' || word.back() == ':')) {
      word.remove_suffix(1);
      stop_after = true;
    }
    bool has_digit = false;
    for (char c : word) has_digit = has_digit || is_digit(c);
    if (has_digit || is_roman(word)) break;
    if (!out.empty()) out.push_back(' ');
    out += word;
    if (stop_after) break;
    p = q;
    while (p < rest.size() && rest[p] == ' ') ++p;
  }
  return out;
}

std::size_t find_ibid(std::string_view s) {
  const std::string lower = to_lower(s);
  std::size_t pos = 0;
  while ((pos = lower.find("ibid", pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_alpha(lower[pos - 1]);
    const bool right_ok = pos + 4 >= lower.size() || !is_alpha(lower[pos + 4]);
    if (left_ok && right_ok) return pos;
    ++pos;
  }
  return std::string::npos;
}

std::size_t dash_run_length(std::string_view s) {
  std::size_t n = 0;
  while (n < s.size() && s[n] == '-') ++n;
  return n;
}

}  // namespace

bool is_backreference(std::string_view normalized) {
  return dash_run_length(normalized) >= 2 && find_ibid(normalized) != std::string::npos;
}

std::vector<NoisyReference> expand_backreferences(std::vector<NoisyReference> refs) {
  std::optional<std::string> antecedent;
  for (auto& ref : refs) {
    if (!is_backreference(ref.normalized)) {
      antecedent = ref.normalized;
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> year;
    if (antecedent) year = find_year_token(*antecedent);
    if (!year) {
      ref.orphan_backreference = true;
      continue;
    }
    const std::string authors = trim(std::string_view(*antecedent).substr(0, year->first));
    const std::string source = leading_source(std::string_view(*antecedent).substr(year->second));

    std::string body = ref.normalized.substr(dash_run_length(ref.normalized));
    if (!body.empty() && body.front() == ' ') body.erase(0, 1);
    if (!source.empty()) {
      const std::size_t at = find_ibid(body);
      std::size_t end = at + 4;
      if (end < body.size() && body[end] == '.') ++end;
      body.replace(at, end - at, source);
    }
    ref.normalized = authors.empty() ? body : authors + " " + body;
  }
  return refs;
}

}  // namespace refres
