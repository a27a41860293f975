// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refres {

enum class Slot { volume, page, number };
enum class KindHint { serial, proceedings, preprint };

std::string_view to_string(Slot slot);
std::optional<Slot> parse_slot(std::string_view text);
std::optional<KindHint> parse_kind_hint(std::string_view text);

/// What a source expects after it: usually (volume, page), a single number
/// for report and preprint series.
struct SlotTemplate {
  std::string name;
  std::vector<Slot> slots;
  KindHint kind_hint = KindHint::serial;
};

class TemplateSet {
 public:
  /// Starts with the built-in "default" (volume, page) template.
  TemplateSet();

  /// Adds or replaces a template. Throws Error if a preprint template does
  /// not have exactly one slot, or a template has no slots.
  void add(SlotTemplate t);
  const SlotTemplate* find(std::string_view name) const;
  const SlotTemplate& default_template() const;
  const SlotTemplate& get_or_default(std::string_view name) const;

 private:
  std::map<std::string, SlotTemplate, std::less<>> templates_;
};

using Filler = std::int64_t;

struct YearSplit {
  std::string author_segment;
  int year = 0;
  std::optional<char> year_suffix;
  std::string rest;
  /// Span of the year token (suffix included) in the input.
  std::size_t year_begin = 0;
  std::size_t year_end = 0;
};

/// Leftmost standalone 1500-2099 year, optionally followed by one lowercase
/// letter. Returns nullopt when there is none.
std::optional<YearSplit> extract_year(std::string_view ref);

struct HeadAndFillers {
  std::string head;
  std::vector<Filler> fillers;
};

/// Head: the letters of `rest`, with every run of non-letters turned into one
/// blank. Fillers: every maximal digit run, in order.
HeadAndFillers extract_head_and_fillers(std::string_view rest);

struct SlotAssignment {
  std::map<Slot, Filler> values;
  /// Volume missing from the reference; the matcher derives it from the year.
  bool volume_from_year = false;
  /// Index of the filler discarded as an insertion error, if any.
  std::optional<std::size_t> dropped_filler;

  std::optional<Filler> get(Slot s) const {
    auto it = values.find(s);
    return it == values.end() ? std::nullopt : std::optional<Filler>(it->second);
  }
};

/// Positional assignment when counts agree; one candidate per dropped filler
/// when there is one filler too many; a volume-less candidate when a
/// (volume, page) template gets a single filler. Empty means slot mismatch.
std::vector<SlotAssignment> fill_slots(const SlotTemplate& slot_template, std::span<const Filler> fillers);

/// The parsed interpretation of one reference under one candidate source.
struct FieldedReference {
  std::string author_segment;
  int year = 0;
  std::optional<char> year_suffix;
  std::string head;
  std::vector<Filler> fillers;
  const SlotTemplate* slot_template = nullptr;
  SlotAssignment filled;
};

}  // namespace refres
