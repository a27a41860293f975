// SPDX-License-Identifier: Apache-2.0

#include "refres/noise.hpp"

#include <algorithm>
#include <limits>

#include "refres/error.hpp"
#include "refres/keyvalue.hpp"
#include "refres/text.hpp"

namespace refres {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed ^ splitmix64(index))) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

void NoiseConfig::validate() const {
  const std::pair<const char*, double> rates[] = {
      {"ocr_char_confusion_rate", ocr_char_confusion_rate},
      {"blank_insertion_rate", blank_insertion_rate},
      {"blank_deletion_rate", blank_deletion_rate},
      {"last_page_use", author_errors.last_page_use},
      {"adjacent_digit_swap", author_errors.adjacent_digit_swap},
      {"year_off_by_one", author_errors.year_off_by_one},
      {"wrong_author_order", author_errors.wrong_author_order},
      {"style_variant_rate", style_variant_rate},
      {"missing_target_rate", missing_target_rate},
  };
  for (const auto& [name, value] : rates) {
    if (!(value >= 0.0 && value <= 1.0)) throw Error(std::string(name) + ": rate must lie in [0, 1]");
  }
}

void NoiseConfig::apply(const std::map<std::string, std::string>& values) {
  // On error the config is left as it was.
  const NoiseConfig saved = *this;
  try {
    apply_unchecked(values);
    validate();
  } catch (...) {
    *this = saved;
    throw;
  }
}

void NoiseConfig::apply_unchecked(const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "ocr_char_confusion_rate") {
      ocr_char_confusion_rate = parse_double(value, key);
    } else if (key == "blank_insertion_rate") {
      blank_insertion_rate = parse_double(value, key);
    } else if (key == "blank_deletion_rate") {
      blank_deletion_rate = parse_double(value, key);
    } else if (key == "last_page_use") {
      author_errors.last_page_use = parse_double(value, key);
    } else if (key == "adjacent_digit_swap") {
      author_errors.adjacent_digit_swap = parse_double(value, key);
    } else if (key == "year_off_by_one") {
      author_errors.year_off_by_one = parse_double(value, key);
    } else if (key == "wrong_author_order") {
      author_errors.wrong_author_order = parse_double(value, key);
    } else if (key == "author_error_rate") {
      const double r = parse_double(value, key);
      author_errors = {r, r, r, r};
    } else if (key == "style_variant_rate") {
      style_variant_rate = parse_double(value, key);
    } else if (key == "missing_target_rate") {
      missing_target_rate = parse_double(value, key);
    } else if (key == "count") {
      const long long n = parse_integer(value, key);
      if (n < 0) throw Error("count: must not be negative");
      count = static_cast<std::size_t>(n);
    } else if (key == "seed") {
      seed = static_cast<std::uint64_t>(parse_integer(value, key));
    } else if (key == "confusion_table") {
      if (value == "default") {
        confusion_table = ConfusionTable::defaults();
      } else if (value == "none") {
        confusion_table = ConfusionTable();
      } else {
        throw Error("confusion_table: expected default or none");
      }
    } else if (key == "confusion") {
      for (const std::string& item : split_list(value)) {
        // a>b or a>b:weight
        if (item.size() < 3 || item[1] != '>') throw Error("confusion: bad entry '" + item + "'");
        const double w = item.size() > 4 && item[3] == ':' ? parse_double(item.substr(4), key) : 1.0;
        confusion_table.add(item[0], item[2], w);
      }
    } else if (key.rfind("style.", 0) == 0) {
      style_variants[key.substr(6)] = split_list(value, '|');
    } else {
      throw Error("unknown noise setting '" + key + "'");
    }
  }
}

NoiseConfig NoiseConfig::load(const std::string& path) {
  NoiseConfig c;
  c.apply(load_key_values(path));
  return c;
}

NoiseConfig NoiseConfig::clean() {
  NoiseConfig c;
  c.ocr_char_confusion_rate = 0.0;
  c.blank_insertion_rate = 0.0;
  c.blank_deletion_rate = 0.0;
  c.author_errors = {0.0, 0.0, 0.0, 0.0};
  c.style_variant_rate = 0.0;
  c.missing_target_rate = 0.0;
  return c;
}

std::string initials_for(const std::string& last_name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : last_name) h = (h ^ c) * 1099511628211ULL;
  h = splitmix64(h);
  std::string out(1, static_cast<char>('A' + h % 26));
  out += ".";
  if ((h >> 8) % 3 == 0) {
    out += " ";
    out += static_cast<char>('A' + (h >> 16) % 26);
    out += ".";
  }
  return out;
}

CitationFields citation_fields(const BibRecord& r, const std::string& source_variant) {
  CitationFields f;
  f.kind = r.kind;
  f.last_names = r.author_last_names;
  for (const auto& n : r.author_last_names) f.initials.push_back(initials_for(n));
  f.year = r.year;
  f.source = source_variant;
  f.volume = r.volume;
  f.page = r.first_page;
  f.qualifier = r.qualifier;
  f.title = r.title;
  f.institution = r.institution;
  f.number_only = has_bibstem(r.kind) && r.volume == 0;
  return f;
}

namespace {

// "van de Hulst" with initials "H. C." -> "Hulst, H. C. van de."
std::string render_author(const std::string& last_name, const std::string& initials) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < last_name.size()) {
    while (i < last_name.size() && last_name[i] == ' ') ++i;
    std::size_t j = i;
    while (j < last_name.size() && last_name[j] != ' ') ++j;
    if (j > i) words.push_back(last_name.substr(i, j - i));
    i = j;
  }
  std::size_t core = 0;
  while (core + 1 < words.size() && !words[core].empty() && words[core][0] >= 'a' && words[core][0] <= 'z') ++core;
  std::string out;
  for (std::size_t k = core; k < words.size(); ++k) out += (k > core ? " " : "") + words[k];
  out += ", " + initials;
  if (core > 0) {
    for (std::size_t k = 0; k < core; ++k) out += " " + words[k];
    out += ".";
  }
  return out;
}

std::string render_authors(const CitationFields& f) {
  const std::size_t n = f.last_names.size();
  auto one = [&](std::size_t k) {
    return render_author(f.last_names[k], k < f.initials.size() ? f.initials[k] : initials_for(f.last_names[k]));
  };
  if (n == 0) return "Anon.";
  if (n == 1) return one(0);
  if (n > 3) return one(0) + ", " + one(1) + ", " + one(2) + ", et al.";
  std::string out;
  for (std::size_t k = 0; k + 1 < n; ++k) out += one(k) + ", ";
  return out + "and " + one(n - 1);
}

std::string closed(const std::string& s) { return !s.empty() && s.back() == '.' ? s : s + "."; }

std::string page_text(const CitationFields& f) {
  std::string p = std::to_string(f.page);
  if (f.qualifier != '.') p = std::string(1, f.qualifier) + p;
  return p;
}

}  // namespace

std::string render_citation(const CitationFields& f, RenderStyle style) {
  const std::string authors = render_authors(f);
  const std::string year = std::to_string(f.year);
  std::string head = style == RenderStyle::parenthesized_year ? authors + " (" + year + ") " : authors + " " + year + ", ";

  switch (f.kind) {
    case RecordKind::thesis:
      return head + "Ph.D. Thesis, " + closed(f.institution);
    case RecordKind::monograph:
      return head + closed(f.title);
    case RecordKind::serial:
    case RecordKind::proceedings:
      break;
  }
  const std::string page = page_text(f);
  if (f.number_only) {
    if (style == RenderStyle::markers) return head + f.source + " No. " + page + ".";
    return head + f.source + " " + page + ".";
  }
  const std::string volume = std::to_string(f.volume);
  switch (style) {
    case RenderStyle::canonical:
    case RenderStyle::parenthesized_year:
      return head + f.source + " " + volume + ", " + page + ".";
    case RenderStyle::extra_commas:
      return head + f.source + ", " + volume + ", " + page + ".";
    case RenderStyle::markers:
      return head + (f.kind == RecordKind::proceedings ? "in " : "") + f.source + ", Vol. " + volume + ", p. " +
             page + ".";
  }
  return head;
}

std::string render_reference(const BibRecord& record, const std::string& source_variant, RenderStyle style) {
  return render_citation(citation_fields(record, source_variant), style);
}

std::vector<std::string> apply_author_errors(CitationFields& f, const BibRecord& record, const AuthorErrorRates& rates,
                                             Rng& rng) {
  std::vector<std::string> labels;
  const bool numbered = has_bibstem(f.kind);
  if (numbered && !f.number_only && rng.chance(rates.last_page_use) && record.last_page &&
      *record.last_page > record.first_page) {
    f.page = *record.last_page;
    labels.push_back("last-page");
  }
  if (numbered && rng.chance(rates.adjacent_digit_swap)) {
    std::string digits = std::to_string(f.page);
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
      if (digits[i] != digits[i + 1] && !(i == 0 && digits[1] == '0')) spots.push_back(i);
    }
    if (!spots.empty()) {
      const std::size_t i = spots[rng.below(spots.size())];
      std::swap(digits[i], digits[i + 1]);
      f.page = std::stoi(digits);
      labels.push_back("digit-swap");
    }
  }
  if (numbered && rng.chance(rates.year_off_by_one)) {
    f.year += rng.chance(0.5) ? 1 : -1;
    labels.push_back("year-off-by-one");
  }
  if (f.last_names.size() >= 2 && rng.chance(rates.wrong_author_order)) {
    std::swap(f.last_names[0], f.last_names[1]);
    if (f.initials.size() >= 2) std::swap(f.initials[0], f.initials[1]);
    labels.push_back("author-order");
  }
  return labels;
}

CorruptedText corrupt(const std::string& clean, const NoiseConfig& config, Rng& rng) {
  CorruptedText out;
  auto label = [&out](const char* l) {
    if (std::find(out.labels.begin(), out.labels.end(), l) == out.labels.end()) out.labels.emplace_back(l);
  };

  std::string s = clean;
  if (config.ocr_char_confusion_rate > 0.0) {
    for (char& c : s) {
      const auto& alts = config.confusion_table.alternatives(c);
      if (alts.empty() || !rng.chance(config.ocr_char_confusion_rate)) continue;
      double total = 0.0;
      for (const auto& a : alts) total += a.weight;
      double pick = rng.uniform() * total;
      char to = alts.back().to;
      for (const auto& a : alts) {
        if (pick < a.weight) {
          to = a.to;
          break;
        }
        pick -= a.weight;
      }
      c = to;
      label("ocr-confusion");
    }
  }

  if (config.blank_insertion_rate > 0.0 || config.blank_deletion_rate > 0.0) {
    std::string t;
    t.reserve(s.size() + 8);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == ' ' && rng.chance(config.blank_deletion_rate)) {
        label("blank-deletion");
        continue;
      }
      t += s[i];
      if (i + 1 < s.size() && s[i] != ' ' && s[i + 1] != ' ' && rng.chance(config.blank_insertion_rate)) {
        t += ' ';
        label("blank-insertion");
      }
    }
    s = std::move(t);
  }
  out.text = std::move(s);
  return out;
}

CorruptedText corrupt(const std::string& clean, const NoiseConfig& config) {
  Rng rng(config.seed, 0);
  return corrupt(clean, config, rng);
}

}  // namespace refres
