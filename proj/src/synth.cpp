// SPDX-License-Identifier: Apache-2.0

#include "refres/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "refres/error.hpp"
#include "refres/text.hpp"

namespace refres {

namespace {

constexpr const char* kOnsets[] = {"b", "c", "d", "f", "g", "h", "k", "l", "m", "n", "p", "r", "s", "t", "v",
                                   "w", "z", "br", "ch", "st", "tr", "gr", "kr", "sch", "fr", "pl", "j"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u", "a", "e", "o", "ae", "ei", "ou", "y"};
constexpr const char* kCodas[] = {"", "", "", "n", "r", "s", "l", "m", "t", "ck", "nd", "rt", "ng", "x"};
constexpr const char* kParticles[] = {"van", "van de", "von", "de", "van der"};
constexpr const char* kInstitutions[] = {
    "Harvard Univ.", "Univ. of Chicago", "California Institute of Technology", "Princeton Univ.",
    "Univ. of California, Berkeley", "Leiden Univ.", "Univ. of Cambridge", "Univ. of Toronto",
    "Columbia Univ.", "Yale Univ.", "Univ. of Michigan", "Univ. of Texas", "Australian National Univ.",
    "Univ. of Manchester", "Cornell Univ."};
constexpr const char* kTopics[] = {
    "stellar", "atmospheres", "interstellar", "matter", "galactic", "structure", "variable", "stars",
    "radio", "sources", "solar", "physics", "planetary", "nebulae", "magnetic", "fields", "spectra",
    "clusters", "dynamics", "evolution", "cosmic", "rays", "photometry", "binary", "systems", "pulsars",
    "quasars", "abundances", "rotation", "convection", "dust", "gas", "motions", "luminosity", "function"};

template <std::size_t N>
const char* pick(const char* const (&arr)[N], Rng& rng) {
  return arr[rng.below(N)];
}

std::vector<std::string> surname_pool(Rng& rng, std::size_t n) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string name;
    const std::size_t syllables = 2 + rng.below(2);
    for (std::size_t k = 0; k < syllables; ++k) {
      name += pick(kOnsets, rng);
      name += pick(kVowels, rng);
      if (k + 1 == syllables || rng.chance(0.3)) name += pick(kCodas, rng);
    }
    if (name.size() < 4) continue;
    name[0] = static_cast<char>(name[0] - 'a' + 'A');
    if (rng.chance(0.02)) name = std::string(pick(kParticles, rng)) + " " + name;
    if (seen.insert(name).second) out.push_back(std::move(name));
  }
  return out;
}

std::vector<std::string> draw_authors(const std::vector<std::string>& pool, Rng& rng) {
  const double u = rng.uniform();
  const std::size_t n = u < 0.35 ? 1 : u < 0.65 ? 2 : u < 0.85 ? 3 : 4 + rng.below(3);
  std::vector<std::string> out;
  while (out.size() < n) {
    const std::string& name = pool[rng.below(pool.size())];
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

std::string draw_title(Rng& rng, std::size_t words) {
  std::string out;
  for (std::size_t k = 0; k < words; ++k) {
    std::string w = pick(kTopics, rng);
    if (k == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    out += (k ? " " : "") + w;
  }
  return out;
}

// Running position of one numbered series.
struct Series {
  std::string bibstem;
  int year = 0;
  int volume = 1;
  int next_page = 1;
  int next_letter = 1;
  int articles_left = 0;
};

void start_volume(Series& s, Rng& rng, bool first) {
  if (!first) {
    ++s.volume;
    if (rng.chance(0.5)) ++s.year;
  }
  s.next_page = 1;
  s.next_letter = 1;
  s.articles_left = 15 + static_cast<int>(rng.below(40));
}

}  // namespace

std::vector<BibRecord> synthesize_database(const AuthorityTable& authority, const TemplateSet& templates,
                                           const SynthConfig& config) {
  std::map<std::string, KindHint> stems;
  for (const AuthorityEntry& e : authority.entries()) {
    stems.emplace(e.bibstem, templates.get_or_default(e.template_name).kind_hint);
  }
  std::vector<std::string> serial, proceedings, preprint;
  for (const auto& [stem, hint] : stems) {
    (hint == KindHint::serial ? serial : hint == KindHint::proceedings ? proceedings : preprint).push_back(stem);
  }
  if (serial.empty()) throw Error("authority table has no serial sources");

  Rng rng(config.seed, 0);
  const auto pool = surname_pool(rng, std::max<std::size_t>(500, config.records));

  auto series_for = [&rng](const std::vector<std::string>& names, int first_volume_max) {
    std::vector<Series> out;
    for (const std::string& stem : names) {
      Series s;
      s.bibstem = stem;
      s.year = 1930 + static_cast<int>(rng.below(40));
      s.volume = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(first_volume_max)));
      start_volume(s, rng, true);
      out.push_back(s);
    }
    return out;
  };
  auto journals = series_for(serial, 150);
  auto meetings = series_for(proceedings, 60);
  auto reports = series_for(preprint, 1);

  const std::size_t n = config.records;
  auto share = [n](double f) { return static_cast<std::size_t>(std::llround(f * static_cast<double>(n))); };
  std::size_t n_letters = share(config.letter_fraction);
  std::size_t n_proc = proceedings.empty() ? 0 : share(config.proceedings_fraction);
  std::size_t n_pre = preprint.empty() ? 0 : share(config.preprint_fraction);
  std::size_t n_thesis = share(config.thesis_fraction);
  std::size_t n_mono = share(config.monograph_fraction);
  const std::size_t specials = n_letters + n_proc + n_pre + n_thesis + n_mono;
  if (specials > n) throw Error("synthetic fractions add up to more than 1");
  std::size_t n_serial = n - specials;

  std::vector<BibRecord> out;
  out.reserve(n);
  std::set<std::string> codes;
  auto emit = [&](BibRecord r) {
    r.first_author_initial = initial_of(r.author_last_names.front());
    r.bibcode = build_bibcode(r.year, has_bibstem(r.kind) ? r.bibstem : (r.kind == RecordKind::thesis ? "PhDT" : "book"),
                              r.volume, r.qualifier, r.first_page, r.first_author_initial);
    if (!codes.insert(r.bibcode.text()).second) return false;
    out.push_back(std::move(r));
    return true;
  };

  auto numbered = [&](Series& s, RecordKind kind, bool letter) {
    BibRecord r;
    r.kind = kind;
    r.author_last_names = draw_authors(pool, rng);
    r.year = s.year;
    r.bibstem = s.bibstem;
    r.volume = s.volume;
    const int length = letter ? 1 + static_cast<int>(rng.below(4)) : 1 + static_cast<int>(rng.below(24));
    int& cursor = letter ? s.next_letter : s.next_page;
    r.first_page = cursor;
    r.last_page = cursor + length - 1;
    cursor += length + (rng.chance(0.1) ? 1 + static_cast<int>(rng.below(6)) : 0);
    if (letter) r.qualifier = 'L';
    if (kind == RecordKind::proceedings) r.title = draw_title(rng, 3 + rng.below(3));
    if (--s.articles_left <= 0 || s.next_page > 4000) start_volume(s, rng, false);
    emit(std::move(r));
  };

  for (std::size_t k = 0; k < n_serial; ++k) numbered(journals[rng.below(journals.size())], RecordKind::serial, false);
  for (std::size_t k = 0; k < n_letters; ++k) numbered(journals[rng.below(journals.size())], RecordKind::serial, true);
  for (std::size_t k = 0; k < n_proc; ++k) {
    numbered(meetings[rng.below(meetings.size())], RecordKind::proceedings, false);
  }
  for (std::size_t k = 0; k < n_pre; ++k) {
    Series& s = reports[rng.below(reports.size())];
    BibRecord r;
    r.kind = RecordKind::serial;
    r.author_last_names = draw_authors(pool, rng);
    r.year = s.year;
    r.bibstem = s.bibstem;
    r.volume = 0;
    r.first_page = s.next_page;
    s.next_page += 1 + static_cast<int>(rng.below(3));
    if (rng.chance(0.05)) ++s.year;
    emit(std::move(r));
  }
  int counter = 1;
  for (std::size_t k = 0; k < n_thesis; ++k) {
    BibRecord r;
    r.kind = RecordKind::thesis;
    r.author_last_names = {pool[rng.below(pool.size())]};
    r.year = 1930 + static_cast<int>(rng.below(60));
    r.first_page = counter++;
    r.institution = pick(kInstitutions, rng);
    emit(std::move(r));
  }
  for (std::size_t k = 0; k < n_mono; ++k) {
    BibRecord r;
    r.kind = RecordKind::monograph;
    r.author_last_names = draw_authors(pool, rng);
    r.year = 1930 + static_cast<int>(rng.below(60));
    r.first_page = counter++;
    r.title = draw_title(rng, 3 + rng.below(4));
    emit(std::move(r));
  }
  return out;
}

GeneratedCorpus generate_corpus(const std::vector<BibRecord>& records, const AuthorityTable& authority,
                                const NoiseConfig& config) {
  if (records.empty()) throw Error("cannot generate a corpus from an empty record set");
  config.validate();

  std::map<std::string, std::vector<std::string>> spellings = config.style_variants;
  for (const AuthorityEntry& e : authority.entries()) {
    if (!config.style_variants.count(e.bibstem)) spellings[e.bibstem].push_back(e.display);
  }

  const std::size_t n = config.count ? config.count : records.size();
  Rng master(config.seed, ~std::uint64_t{0});
  std::vector<std::size_t> targets;
  targets.reserve(n);
  std::vector<std::size_t> order(records.size());
  while (targets.size() < n) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[master.below(i)]);
    for (std::size_t i = 0; i < order.size() && targets.size() < n; ++i) targets.push_back(order[i]);
  }
  std::vector<bool> withheld(records.size(), false);
  {
    std::set<std::size_t> distinct(targets.begin(), targets.end());
    for (std::size_t t : distinct) withheld[t] = master.chance(config.missing_target_rate);
  }

  GeneratedCorpus out;
  char id[32];
  for (std::size_t i = 0; i < n; ++i) {
    const BibRecord& rec = records[targets[i]];
    Rng rng(config.seed, i + 1);
    std::string source;
    if (has_bibstem(rec.kind)) {
      auto it = spellings.find(rec.bibstem);
      if (it == spellings.end() || it->second.empty()) {
        throw Error("no source spelling for bibstem '" + rec.bibstem + "'");
      }
      source = it->second[rng.below(it->second.size())];
    }
    GoldEntry gold;
    RenderStyle style = RenderStyle::canonical;
    if (rng.chance(config.style_variant_rate)) {
      style = static_cast<RenderStyle>(1 + rng.below(3));
      gold.labels.push_back("style-variant");
    }
    CitationFields fields = citation_fields(rec, source);
    for (std::string& l : apply_author_errors(fields, rec, config.author_errors, rng)) gold.labels.push_back(std::move(l));
    CorruptedText text = corrupt(render_citation(fields, style), config, rng);
    for (std::string& l : text.labels) gold.labels.push_back(std::move(l));

    std::snprintf(id, sizeof id, "r%06zu", i + 1);
    NoisyReference ref;
    ref.id = id;
    ref.position = i;
    ref.raw = text.text;
    ref.normalized = normalize(ref.raw);
    out.references.push_back(std::move(ref));

    gold.id = id;
    if (withheld[targets[i]]) {
      gold.labels.push_back("missing-target");
    } else {
      gold.bibcode = rec.bibcode;
    }
    out.gold.push_back(std::move(gold));
  }
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (!withheld[r]) out.database.push_back(records[r]);
  }
  return out;
}

}  // namespace refres
