// SPDX-License-Identifier: Apache-2.0

#include "refres/heuristics.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "refres/error.hpp"
#include "refres/fielding.hpp"
#include "refres/text.hpp"

namespace refres {

namespace {

constexpr int kMaxPasses = 16;

// Splits `s` at the end of its year token. Empty optional when there is no
// extractable year.
std::optional<std::pair<std::string, std::string>> split_at_year(std::string_view s) {
  auto y = extract_year(s);
  if (!y) return std::nullopt;
  return std::make_pair(std::string(s.substr(0, y->year_end)), std::string(s.substr(y->year_end)));
}

std::string join_at_year(const std::string& prefix, std::string_view rest) {
  std::string out = prefix;
  if (!rest.empty() && !out.empty() && is_alnum(out.back()) && is_alnum(rest.front())) out.push_back(' ');
  out += rest;
  return normalize(out);
}

template <typename F>
std::string to_fixpoint(std::string s, F&& pass) {
  for (int i = 0; i < kMaxPasses; ++i) {
    std::string next = pass(s);
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}

struct Token {
  std::size_t begin;
  std::size_t end;
};

std::vector<Token> alnum_tokens(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_alnum(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_alnum(s[j])) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

bool year_shaped(std::string_view digits) {
  return digits.size() == 4 && ((digits[0] == '1' && digits[1] >= '5' && digits[1] <= '9') ||
                                (digits[0] == '2' && digits[1] == '0'));
}

// One pass of the numeral rules over `s`. `repair_year` allows joining two
// digit groups into a year-shaped token.
std::string numerals_pass(std::string s, const CorrectionTables& tables, bool repair_year) {
  // Bigram rule: a confusable letter right after a digit, inside a numeric
  // token, is a misread digit.
  for (const Token& t : alnum_tokens(s)) {
    int digits = 0, letters = 0;
    for (std::size_t i = t.begin; i < t.end; ++i) (is_digit(s[i]) ? digits : letters)++;
    for (std::size_t i = t.begin + 1; i < t.end; ++i) {
      auto it = tables.in_string().find(s[i]);
      if (it == tables.in_string().end() || !is_digit(s[i - 1])) continue;
      const bool next_digit = i + 1 < t.end && is_digit(s[i + 1]);
      if (next_digit || digits > letters) {
        s[i] = it->second;
        ++digits;
        --letters;
      }
    }
  }
  // Unigram rule: confusable letters opening an otherwise numeric token.
  for (const Token& t : alnum_tokens(s)) {
    std::size_t k = t.begin;
    while (k < t.end && tables.head_start().count(s[k])) ++k;
    if (k == t.begin || k == t.end) continue;
    std::size_t tail_end = t.end;
    if (t.end - k >= 2 && s[t.end - 1] >= 'a' && s[t.end - 1] <= 'z') --tail_end;
    bool numeric = true;
    for (std::size_t i = k; i < tail_end; ++i) numeric = numeric && is_digit(s[i]);
    if (!numeric || tail_end - k <= k - t.begin) continue;
    for (std::size_t i = t.begin; i < k; ++i) s[i] = tables.head_start().at(s[i]);
  }
  // Blank insertion: "1 41" -> "141", "112 4" -> "1124" (at most four digits).
  const auto tokens = alnum_tokens(s);
  for (std::size_t n = 0; n + 1 < tokens.size(); ++n) {
    const Token a = tokens[n], b = tokens[n + 1];
    if (b.begin != a.end + 1 || s[a.end] != ' ') continue;
    std::string_view da(s.data() + a.begin, a.end - a.begin), db(s.data() + b.begin, b.end - b.begin);
    bool all_digits = true;
    for (char c : da) all_digits = all_digits && is_digit(c);
    for (char c : db) all_digits = all_digits && is_digit(c);
    if (!all_digits) continue;
    const std::string joined = std::string(da) + std::string(db);
    const bool single = (da.size() == 1 || db.size() == 1) && joined.size() <= 4 && !year_shaped(da) &&
                        !year_shaped(db);
    if (single || (repair_year && year_shaped(joined))) {
      s.erase(a.end, 1);
      return s;  // token offsets are stale; the caller iterates to a fixpoint
    }
  }
  return s;
}

const char* const kQualifierPhrases[] = {
    "english translation", "engl. transl.", "engl. trans.", "transl.", "in russian", "russian original",
};

std::string remove_phrases(std::string s) {
  for (const char* phrase : kQualifierPhrases) {
    const std::string p(phrase);
    for (std::size_t at = to_lower(s).find(p); at != std::string::npos; at = to_lower(s).find(p)) {
      s.replace(at, p.size(), " ");
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(StageId id) {
  switch (id) {
    case StageId::S1: return "S1-abbrev";
    case StageId::S2: return "S2-numerals";
    case StageId::S3: return "S3-source";
    case StageId::S4: return "S4-dissect";
    case StageId::S5: return "S5-aux";
  }
  return "S1-abbrev";
}

std::optional<StageId> parse_stage_id(std::string_view text) {
  for (auto id : {StageId::S1, StageId::S2, StageId::S3, StageId::S4, StageId::S5}) {
    const std::string_view full = to_string(id);
    if (text == full || text == full.substr(0, 2)) return id;
  }
  return std::nullopt;
}

CorrectionTables CorrectionTables::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open correction table " + path);
  return parse(in, path);
}

CorrectionTables CorrectionTables::parse(std::istream& in, const std::string& name) {
  CorrectionTables tables;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 3) throw InputError(name, line_no, "columns", "expected 3 tab-separated columns");
    CorrectionContext context;
    if (cols[2] == "abbrev") {
      context = CorrectionContext::abbrev;
    } else if (cols[2] == "head-start") {
      context = CorrectionContext::head_start;
    } else if (cols[2] == "in-string") {
      context = CorrectionContext::in_string;
    } else if (cols[2] == "short-head") {
      context = CorrectionContext::short_head;
    } else {
      throw InputError(name, line_no, "context", "unknown context '" + cols[2] + "'");
    }
    try {
      tables.add(cols[0], cols[1], context);
    } catch (const Error& e) {
      throw InputError(name, line_no, "pattern", e.what());
    }
  }
  return tables;
}

void CorrectionTables::add(std::string pattern, std::string replacement, CorrectionContext context) {
  if (context == CorrectionContext::head_start || context == CorrectionContext::in_string) {
    if (pattern.size() != 1 || !is_alpha(pattern[0]) || replacement.size() != 1 || !is_digit(replacement[0])) {
      throw Error("confusion entries map one letter to one digit");
    }
    (context == CorrectionContext::head_start ? head_start_ : in_string_)[pattern[0]] = replacement[0];
    return;
  }
  CorrectionRule rule;
  try {
    const std::string anchored = context == CorrectionContext::short_head ? "^(?:" + pattern + ")$" : pattern;
    rule.compiled = std::regex(anchored, std::regex::ECMAScript | std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw Error("invalid regex '" + pattern + "': " + e.what());
  }
  rule.pattern = std::move(pattern);
  rule.replacement = std::move(replacement);
  rule.context = context;
  (context == CorrectionContext::short_head ? short_heads_ : abbreviations_).push_back(std::move(rule));
}

Heuristics::Heuristics(CorrectionTables tables, const AuthorityTable& authority)
    : tables_(std::move(tables)), authority_(&authority) {}

std::string Heuristics::s1_fix_abbreviations(std::string_view s) const {
  auto parts = split_at_year(s);
  if (!parts) return std::string(s);
  std::string rest = to_fixpoint(parts->second, [this](const std::string& r) {
    std::string out = r;
    for (const auto& rule : tables_.abbreviations()) out = std::regex_replace(out, rule.compiled, rule.replacement);
    return out;
  });
  return join_at_year(parts->first, rest);
}

std::string Heuristics::s2_fix_numerals(std::string_view s) const {
  if (auto parts = split_at_year(s)) {
    std::string rest = to_fixpoint(parts->second,
                                   [this](const std::string& r) { return numerals_pass(r, tables_, false); });
    return join_at_year(parts->first, rest);
  }
  return normalize(to_fixpoint(std::string(s), [this](const std::string& r) {
    // Once a year appears the remaining passes must leave it alone.
    if (auto parts = split_at_year(r)) {
      return parts->first + numerals_pass(parts->second, tables_, false);
    }
    return numerals_pass(r, tables_, true);
  }));
}

std::string Heuristics::s3_transform_source(std::string_view s) const {
  auto parts = split_at_year(s);
  if (!parts) return std::string(s);
  static const std::regex kParenthesized(R"(\([^()0-9]*\))");
  static const std::regex kMarkers(R"((^|[^A-Za-z])(?:Vol|vol|VOL|No|no|NO|Nr|nr|pp|p|P|Bd)\.? ?(?=[0-9]))");
  static const std::regex kLeadingIn(R"(^[ ,.;:]*(?:in|In|IN):? )");

  std::string rest = to_fixpoint(parts->second, [this](const std::string& r) {
    std::string out = std::regex_replace(r, kParenthesized, " ");
    out = remove_phrases(out);
    out = std::regex_replace(out, kMarkers, "$1");
    out = std::regex_replace(out, kLeadingIn, ", ");
    out = normalize(out);

    const std::string head = extract_head_and_fillers(out).head;
    std::size_t letters = 0;
    for (char c : head) letters += is_alpha(c) ? 1 : 0;
    if (letters <= 4) {
      std::size_t b = 0;
      while (b < out.size() && !is_alnum(out[b])) ++b;
      std::size_t e = b;
      while (e < out.size() && out[e] != ' ' && out[e] != ',') ++e;
      std::string token = out.substr(b, e - b);
      while (!token.empty() && token.back() == '.') token.pop_back();
      for (const auto& rule : tables_.short_heads()) {
        if (std::regex_match(token, rule.compiled)) {
          out.replace(b, token.size(), rule.replacement);
          break;
        }
      }
    }
    return normalize(out);
  });
  if (!rest.empty() && is_alnum(rest.front())) rest.insert(0, " ");
  return join_at_year(parts->first, rest);
}

std::optional<double> Heuristics::best_source_score(std::string_view rest) const {
  const std::string head = extract_head_and_fillers(rest).head;
  auto best = authority_->n_best_sources(head, 1);
  if (best.empty()) return std::nullopt;
  // Exact variants are ranked ahead of any score.
  return best.front().entry->variant == fold_source(head) ? -1.0 : best.front().score;
}

std::string Heuristics::s4_dissect_source(std::string_view rest) const {
  std::vector<std::string> heads;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    if (i < rest.size() && rest[i] != ',' && rest[i] != ':') continue;
    std::string head = extract_head_and_fillers(rest.substr(start, i - start)).head;
    if (!head.empty()) heads.push_back(std::move(head));
    start = i + 1;
  }
  if (heads.size() < 2) return std::string(rest);
  std::optional<double> best_score;
  std::size_t best = 0;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    const auto score = best_source_score(heads[k]);
    if (score && (!best_score || *score < *best_score)) {
      best_score = score;
      best = k;
    }
  }
  return heads[best];
}

std::string Heuristics::s4_rewrite(std::string_view s) const {
  auto parts = split_at_year(s);
  if (!parts) return std::string(s);
  const std::string best = s4_dissect_source(parts->second);
  if (best == parts->second) return std::string(s);
  std::string rest = ", " + best;
  const auto fillers = extract_head_and_fillers(parts->second).fillers;
  for (std::size_t k = 0; k < fillers.size(); ++k) {
    rest += k == 0 ? " " : ", ";
    rest += std::to_string(fillers[k]);
  }
  return join_at_year(parts->first, rest);
}

std::string Heuristics::s5_remove_title(std::string_view s) const {
  auto parts = split_at_year(s);
  if (!parts) return std::string(s);
  std::string rest = parts->second;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool removed = false;
    std::size_t open = rest.find('"');
    while (open != std::string::npos) {
      const std::size_t close = rest.find('"', open + 1);
      if (close == std::string::npos) break;
      // The span goes when what follows it matches a source better than the
      // span itself does.
      const auto inside = best_source_score(rest.substr(open + 1, close - open - 1));
      std::string candidate = rest.substr(0, open) + " " + rest.substr(close + 1);
      const auto score = best_source_score(candidate);
      if (score && (!inside || *score < *inside)) {
        rest = normalize(candidate);
        if (!rest.empty() && is_alnum(rest.front())) rest.insert(0, " ");
        removed = true;
        break;
      }
      open = rest.find('"', close + 1);
    }
    if (!removed) break;
  }
  return join_at_year(parts->first, rest);
}

std::vector<std::string> Heuristics::s5_split(std::string_view s) const {
  static const std::regex kSecondAuthor(R"([.;] ([A-Z][A-Za-z'-]*, (?:[A-Z]\. ?)+))");
  auto first = extract_year(s);
  if (!first) return {std::string(s)};
  const std::string tail(s.substr(first->year_end));
  for (auto it = std::sregex_iterator(tail.begin(), tail.end(), kSecondAuthor); it != std::sregex_iterator(); ++it) {
    const std::size_t at = first->year_end + static_cast<std::size_t>(it->position(1));
    auto second = extract_year(s.substr(at));
    if (!second) continue;
    bool clean_authors = true;
    for (char c : second->author_segment) clean_authors = clean_authors && !is_digit(c);
    if (!clean_authors || second->author_segment.size() > 120) continue;
    return {trim(s.substr(0, at)), trim(s.substr(at))};
  }
  return {std::string(s)};
}

std::string Heuristics::rewrite(StageId id, std::string_view s) const {
  switch (id) {
    case StageId::S1: return s1_fix_abbreviations(s);
    case StageId::S2: return s2_fix_numerals(s);
    case StageId::S3: return s3_transform_source(s);
    case StageId::S4: return s4_rewrite(s);
    case StageId::S5: return s5_remove_title(s);
  }
  return std::string(s);
}

}  // namespace refres
