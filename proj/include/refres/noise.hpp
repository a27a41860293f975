// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "refres/confusion.hpp"
#include "refres/corpus.hpp"

namespace refres {

/// Deterministic stream for one generated item: seeded from (seed, index) so
/// items can be produced in any order or in parallel.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool chance(double p) { return p > 0.0 && uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct AuthorErrorRates {
  /// Cite the last page instead of the first.
  double last_page_use = 0.02;
  /// Two adjacent page digits transposed.
  double adjacent_digit_swap = 0.02;
  double year_off_by_one = 0.02;
  /// First two authors exchanged.
  double wrong_author_order = 0.02;
};

struct NoiseConfig {
  double ocr_char_confusion_rate = 0.02;
  ConfusionTable confusion_table = ConfusionTable::defaults();
  double blank_insertion_rate = 0.01;
  double blank_deletion_rate = 0.0;
  AuthorErrorRates author_errors;
  /// Probability of rendering in a non-canonical layout (extra commas,
  /// parenthesized year, "Vol."/"p." markers).
  double style_variant_rate = 0.1;
  /// Source spellings per bibstem; bibstems not listed use every authority
  /// variant that maps to them.
  std::map<std::string, std::vector<std::string>> style_variants;
  double missing_target_rate = 0.05;
  /// References to generate; 0 means one per record.
  std::size_t count = 0;
  std::uint64_t seed = 1;

  /// Throws Error when a rate lies outside [0, 1].
  void validate() const;
  /// Keys: the field names above, author error rates by their own names,
  /// `confusion_table = default | none`, `confusion = a>b:w, ...` (added to
  /// the table), `style.<bibstem> = variant | variant`.
  void apply(const std::map<std::string, std::string>& values);
  static NoiseConfig load(const std::string& path);
  /// All rates zero: canonical rendering, no corruption, nothing withheld.
  static NoiseConfig clean();

 private:
  void apply_unchecked(const std::map<std::string, std::string>& values);
};

enum class RenderStyle { canonical, extra_commas, parenthesized_year, markers };

/// Field values as the citing author wrote them, before rendering.
struct CitationFields {
  RecordKind kind = RecordKind::serial;
  std::vector<std::string> last_names;
  std::vector<std::string> initials;
  int year = 0;
  std::string source;
  int volume = 0;
  int page = 0;
  char qualifier = '.';
  std::string title;
  std::string institution;
  /// Single number citation (preprint/report series).
  bool number_only = false;
};

/// One or two initials derived from the name, stable across runs.
std::string initials_for(const std::string& last_name);

CitationFields citation_fields(const BibRecord& record, const std::string& source_variant);

/// "Last, I., Last2, I., and Last3, I. 1950, Source 112, 1." and variants.
/// Particles ("van de") go behind the initials. Theses render as
/// "Last, I. 1970, Ph.D. Thesis, Institution." and monographs as
/// "Last, I. 1939, Title (Publisher)."
std::string render_citation(const CitationFields& fields, RenderStyle style = RenderStyle::canonical);
std::string render_reference(const BibRecord& record, const std::string& source_variant,
                             RenderStyle style = RenderStyle::canonical);

/// Applies author errors to the fields; returns labels of those applied.
std::vector<std::string> apply_author_errors(CitationFields& fields, const BibRecord& record,
                                             const AuthorErrorRates& rates, Rng& rng);

struct CorruptedText {
  std::string text;
  std::vector<std::string> labels;
};

/// Character-level channel: confusion substitutions, then blank insertions
/// and deletions. Labels are distinct and in first-application order.
CorruptedText corrupt(const std::string& clean, const NoiseConfig& config, Rng& rng);
CorruptedText corrupt(const std::string& clean, const NoiseConfig& config);

}  // namespace refres
