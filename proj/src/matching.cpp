// SPDX-License-Identifier: Apache-2.0

#include "refres/matching.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "refres/text.hpp"

namespace refres {

namespace {

bool is_stop_word(std::string_view w) { return w == "and" || w == "et" || w == "al"; }

bool word_char(char c) { return is_alnum(c) || c == '\'' || c == '-'; }

// Lowercased word with stray punctuation removed; empty if it should be dropped.
std::string clean_word(std::string_view raw) {
  std::string w;
  for (char c : raw) {
    if (word_char(c)) w.push_back(c);
  }
  w = to_lower(w);
  if (w.size() <= 2 || is_stop_word(w)) return {};
  return w;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int error_allowance(std::size_t length) {
  if (length < 5) return 2;
  if (length < 10) return 3;
  return 4;
}

}  // namespace

AuthorNameSet AuthorNameSet::from_reference(std::string_view author_segment) {
  AuthorNameSet out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= author_segment.size(); ++i) {
    if (i < author_segment.size() && author_segment[i] != ',' && author_segment[i] != ';' &&
        author_segment[i] != '&') {
      continue;
    }
    const auto words = split_words(author_segment.substr(start, i - start));
    start = i + 1;
    if (words.empty() || words.front().find('.') != std::string_view::npos) continue;
    for (std::string_view w : words) {
      if (w.find('.') != std::string_view::npos) continue;
      std::string cleaned = clean_word(w);
      if (!cleaned.empty()) out.words.push_back(std::move(cleaned));
    }
  }
  return out;
}

AuthorNameSet AuthorNameSet::from_record(const std::vector<std::string>& last_names) {
  AuthorNameSet out;
  for (const auto& name : last_names) {
    for (std::string_view w : split_words(name)) {
      std::string cleaned = clean_word(w);
      if (!cleaned.empty()) out.words.push_back(std::move(cleaned));
    }
  }
  return out;
}

AuthorNameSet AuthorNameSet::from_text(std::string_view text) {
  AuthorNameSet out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_alnum(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && word_char(text[j])) ++j;
    if (j > i) {
      std::string cleaned = clean_word(text.substr(i, j - i));
      if (!cleaned.empty()) out.words.push_back(std::move(cleaned));
    }
    i = j;
  }
  return out;
}

char AuthorNameSet::initial() const {
  if (words.empty()) return '.';
  return initial_of(words.front());
}

double author_distance(const AuthorNameSet& reference_authors, const AuthorNameSet& record_authors) {
  if (record_authors.empty()) throw Error("record has no usable author words");
  if (reference_authors.empty()) return 0.0;
  std::size_t fault = 0;
  int limit = 0;
  for (const auto& w_ref : reference_authors.words) {
    std::size_t best = std::string::npos;
    for (const auto& w_rec : record_authors.words) best = std::min(best, levenshtein(w_ref, w_rec));
    fault += best;
    limit += error_allowance(w_ref.size());
  }
  return 1.0 - static_cast<double>(fault) / static_cast<double>(limit);
}

SerialCandidate make_serial_candidate(const AuthorNameSet& authors, int year, std::string_view bibstem,
                                      const SlotAssignment& filled) {
  SerialCandidate c;
  c.authors = authors;
  c.initial = authors.initial();
  c.year = year;
  c.bibstem = std::string(bibstem);
  if (auto number = filled.get(Slot::number)) {
    c.volume = 0;
    c.page = *number;
  } else {
    c.volume = filled.get(Slot::volume);
    c.page = filled.get(Slot::page).value_or(0);
  }
  return c;
}

namespace {

// Tries candidate bibcodes in rule order and keeps the first acceptance.
class SerialSearch {
 public:
  SerialSearch(const SerialCandidate& c, const RecordIndex& index, const MatchOptions& options, bool wildcard)
      : c_(c), index_(index), options_(options), wildcard_(wildcard) {}

  const MatchDecision& decision() const { return decision_; }
  bool done() const { return decision_.accepted; }

  bool try_key(int year, Filler volume, char qualifier, Filler page, std::set<Field> changed, const char* rule) {
    if (done()) return true;
    if (volume < 0 || volume > 9999 || page < 0 || page > 9999) return false;
    Bibcode key;
    try {
      key = build_bibcode(year, c_.bibstem, volume, qualifier, page, wildcard_ ? 'A' : c_.initial);
    } catch (const BibcodeError&) {
      return false;
    }
    if (wildcard_) {
      for (const BibRecord* r : index_.lookup_first_author_wildcard(key.text())) {
        consider(r, changed, rule);
      }
    } else {
      consider(index_.lookup(key.text()), changed, rule);
    }
    return done();
  }

  // A record found by any route other than a bibcode key, e.g. last-page
  // containment.
  bool try_record(const BibRecord* r, std::set<Field> changed, const char* rule) {
    if (done()) return true;
    if (!wildcard_ && r->first_author_initial != c_.initial) return false;
    consider(r, std::move(changed), rule);
    return done();
  }

 private:
  void consider(const BibRecord* r, const std::set<Field>& changed, const char* rule) {
    if (!r) return;
    const AuthorNameSet rec = AuthorNameSet::from_record(r->author_last_names);
    const double score = rec.empty() ? 0.0 : author_distance(c_.authors, rec);
    if (score <= options_.serial_threshold) {
      decision_.authors_rejected = true;
      return;
    }
    if (decision_.record && pending_score_ >= score) return;
    pending_score_ = score;
    decision_.record = r;
    decision_.fields_changed = changed;
    decision_.author_score = score;
    decision_.rule = wildcard_ ? std::string("wildcard-") + rule : std::string(rule);
    // In wildcard mode every record behind one key is weighed before accepting.
    if (!wildcard_) decision_.accepted = true;
  }

 public:
  void settle() {
    if (decision_.record) decision_.accepted = true;
  }

 private:
  const SerialCandidate& c_;
  const RecordIndex& index_;
  const MatchOptions& options_;
  bool wildcard_;
  double pending_score_ = 0.0;
  MatchDecision decision_;
};

std::vector<Filler> adjacent_swaps(Filler page) {
  std::vector<Filler> out;
  const std::string digits = std::to_string(page);
  for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
    if (digits[i] == digits[i + 1]) continue;
    std::string swapped = digits;
    std::swap(swapped[i], swapped[i + 1]);
    if (swapped[0] == '0') continue;
    out.push_back(std::stoll(swapped));
  }
  return out;
}

// Runs the serial rules; `wildcard` relaxes the author initial.
MatchDecision run_serial_rules(const SerialCandidate& c, const RecordIndex& index, const MatchOptions& options,
                               bool wildcard) {
  SerialSearch s(c, index, options, wildcard);
  auto step = [&](auto&& body) {
    if (s.done()) return;
    body();
    s.settle();
  };
  const int year = c.year;
  const Filler page = c.page;

  if (c.volume) {
    const Filler volume = *c.volume;
    step([&] { s.try_key(year, volume, '.', page, {}, "exact"); });
    if (!options.relaxations) return s.decision();

    step([&] {
      if (auto range = index.year_for_volume(c.bibstem, static_cast<int>(volume))) {
        for (int y = range->first; y <= range->last && !s.done(); ++y) {
          if (y != year) s.try_key(y, volume, '.', page, {Field::year}, "year-from-volume");
        }
      }
    });
    step([&] {
      for (int v : index.volumes_for_year(c.bibstem, year)) {
        if (v != volume && s.try_key(year, v, '.', page, {Field::volume}, "volume-from-year")) break;
      }
    });
    step([&] {
      for (Filler k = 1; k <= 3 && !s.done(); ++k) {
        if (page - k >= 0) s.try_key(year, volume, '.', page - k, {Field::page}, "page-neighborhood");
        s.try_key(year, volume, '.', page + k, {Field::page}, "page-neighborhood");
      }
    });
    step([&] {
      for (const BibRecord* r : index.volume_records(c.bibstem, static_cast<int>(volume))) {
        if (r->first_page >= page) break;
        if (r->year != year || r->qualifier != '.' || !r->last_page || *r->last_page < page) continue;
        if (s.try_record(r, {Field::page}, "page-range")) break;
      }
    });
    step([&] {
      for (Filler p : adjacent_swaps(page)) {
        if (s.try_key(year, volume, '.', p, {Field::page}, "page-swap")) break;
      }
    });
    step([&] { s.try_key(year, volume, 'L', page, {Field::qualifier}, "letter-section"); });
  } else if (options.relaxations) {
    step([&] {
      for (int v : index.volumes_for_year(c.bibstem, year)) {
        if (s.try_key(year, v, '.', page, {Field::volume}, "volume-from-year")) break;
      }
    });
  }
  return s.decision();
}

}  // namespace

MatchDecision match_serial(const SerialCandidate& candidate, const RecordIndex& index, const MatchOptions& options) {
  return run_serial_rules(candidate, index, options, false);
}

MatchDecision relaxed_pass(const SerialCandidate& candidate, const RecordIndex& index,
                           const ConfusionTable& confusions, const MatchOptions& options) {
  MatchDecision plain = match_serial(candidate, index, options);
  if (plain.accepted) return plain;

  MatchDecision wild = run_serial_rules(candidate, index, options, true);
  if (wild.accepted) return wild;
  const bool rejected = plain.authors_rejected || wild.authors_rejected;

  if (candidate.volume) {
    const Filler volume = *candidate.volume;
    for (bool wildcard : {false, true}) {
      SerialSearch s(candidate, index, options, wildcard);
      const std::string digits = std::to_string(candidate.page);
      for (std::size_t i = 0; i < digits.size() && !s.done(); ++i) {
        for (char alt : confusions.digit_alternatives(digits[i])) {
          std::string misread = digits;
          misread[i] = alt;
          if (misread.size() > 1 && misread[0] == '0') continue;
          if (s.try_key(candidate.year, volume, '.', std::stoll(misread), {Field::page}, "page-confusion")) break;
        }
        s.settle();
      }
      for (char q : std::array{'A', 'B', 'C', 'D', 'E'}) {
        if (s.done()) break;
        s.try_key(candidate.year, volume, q, candidate.page, {Field::qualifier}, "qualifier");
        s.settle();
      }
      if (s.done()) return s.decision();
      if (s.decision().authors_rejected) wild.authors_rejected = true;
    }
  }
  wild.authors_rejected = wild.authors_rejected || rejected;
  return wild;
}

std::optional<std::size_t> find_thesis_keyword(std::string_view rest) {
  static const std::regex kKeyword(R"((?:^|[^a-z])(t[hb][a-z0-9]{0,3}s[i1l]s|ph\.? ?d\.?|dissertation)(?![a-z]))",
                                   std::regex::icase | std::regex::optimize);
  std::optional<std::size_t> end;
  for (auto it = std::cregex_iterator(rest.data(), rest.data() + rest.size(), kKeyword);
       it != std::cregex_iterator(); ++it) {
    end = static_cast<std::size_t>((*it).position(1) + (*it).length(1));
  }
  return end;
}

MatchDecision match_thesis(std::string_view author_segment, int year, std::string_view institution_text,
                           const RecordIndex& index, const MatchOptions& options) {
  MatchDecision best;
  const AuthorNameSet authors = AuthorNameSet::from_reference(author_segment);
  const AuthorNameSet institution = AuthorNameSet::from_text(institution_text);
  double best_institution = -1e9;
  for (const BibRecord* r : index.by_initial_year(authors.initial(), year)) {
    if (r->kind != RecordKind::thesis) continue;
    const AuthorNameSet rec = AuthorNameSet::from_record(r->author_last_names);
    if (rec.empty()) continue;
    const double score = author_distance(authors, rec);
    if (score < options.special_threshold) {
      best.authors_rejected = true;
      continue;
    }
    double inst_score = 1.0;
    const AuthorNameSet rec_inst = AuthorNameSet::from_text(r->institution);
    if (!institution.empty() && !rec_inst.empty()) {
      inst_score = author_distance(institution, rec_inst);
      if (inst_score <= 0.0) continue;
    }
    if (best.accepted && (score < best.author_score || (score == best.author_score && inst_score <= best_institution))) {
      continue;
    }
    best.accepted = true;
    best.record = r;
    best.author_score = score;
    best.rule = "thesis";
    best_institution = inst_score;
  }
  return best;
}

MatchDecision match_monograph(std::string_view author_segment, int year, std::string_view head,
                              const RecordIndex& index, const MatchOptions& options) {
  MatchDecision best;
  const AuthorNameSet authors = AuthorNameSet::from_reference(author_segment);
  const AuthorNameSet head_words = AuthorNameSet::from_text(head);
  if (head_words.empty()) return best;
  double best_total = -1e9;
  for (const BibRecord* r : index.by_initial_year(authors.initial(), year)) {
    if (r->kind != RecordKind::monograph && r->kind != RecordKind::proceedings) continue;
    const AuthorNameSet rec = AuthorNameSet::from_record(r->author_last_names);
    const AuthorNameSet title = AuthorNameSet::from_text(r->title);
    if (rec.empty() || title.empty()) continue;
    const double score = author_distance(authors, rec);
    if (score < options.special_threshold) {
      best.authors_rejected = true;
      continue;
    }
    // Every title word should be found among the words of the reference.
    const double title_score = author_distance(title, head_words);
    if (title_score < options.special_threshold) continue;
    if (score + title_score <= best_total) continue;
    best_total = score + title_score;
    best.accepted = true;
    best.record = r;
    best.author_score = score;
    best.rule = "title";
  }
  return best;
}

}  // namespace refres
