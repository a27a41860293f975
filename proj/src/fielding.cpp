// SPDX-License-Identifier: Apache-2.0

#include "refres/fielding.hpp"

#include "refres/error.hpp"
#include "refres/text.hpp"

namespace refres {

namespace {

constexpr Filler kFillerCap = 999'999'999'999;

}  // namespace

std::string_view to_string(Slot slot) {
  switch (slot) {
    case Slot::volume: return "volume";
    case Slot::page: return "page";
    case Slot::number: return "number";
  }
  return "volume";
}

std::optional<Slot> parse_slot(std::string_view text) {
  for (auto s : {Slot::volume, Slot::page, Slot::number}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<KindHint> parse_kind_hint(std::string_view text) {
  if (text == "serial") return KindHint::serial;
  if (text == "proceedings") return KindHint::proceedings;
  if (text == "preprint") return KindHint::preprint;
  return std::nullopt;
}

TemplateSet::TemplateSet() { add(SlotTemplate{"default", {Slot::volume, Slot::page}, KindHint::serial}); }

void TemplateSet::add(SlotTemplate t) {
  if (t.slots.empty()) throw Error("template '" + t.name + "' has no slots");
  if (t.kind_hint == KindHint::preprint && t.slots.size() != 1) {
    throw Error("preprint template '" + t.name + "' must have exactly one slot");
  }
  std::string name = t.name;
  templates_.insert_or_assign(std::move(name), std::move(t));
}

const SlotTemplate* TemplateSet::find(std::string_view name) const {
  auto it = templates_.find(name);
  return it == templates_.end() ? nullptr : &it->second;
}

const SlotTemplate& TemplateSet::default_template() const { return templates_.find("default")->second; }

const SlotTemplate& TemplateSet::get_or_default(std::string_view name) const {
  const SlotTemplate* t = find(name);
  return t ? *t : default_template();
}

std::optional<YearSplit> extract_year(std::string_view ref) {
  for (std::size_t i = 0; i + 4 <= ref.size(); ++i) {
    if (i > 0 && is_alnum(ref[i - 1])) continue;
    const char c0 = ref[i], c1 = ref[i + 1];
    const bool shape = ((c0 == '1' && c1 >= '5' && c1 <= '9') || (c0 == '2' && c1 == '0')) && is_digit(ref[i + 2]) &&
                       is_digit(ref[i + 3]);
    if (!shape) continue;
    std::size_t end = i + 4;
    std::optional<char> suffix;
    if (end < ref.size() && ref[end] >= 'a' && ref[end] <= 'z') suffix = ref[end++];
    if (end < ref.size() && is_alnum(ref[end])) continue;

    YearSplit out;
    out.author_segment = trim(ref.substr(0, i));
    out.year = (c0 - '0') * 1000 + (c1 - '0') * 100 + (ref[i + 2] - '0') * 10 + (ref[i + 3] - '0');
    out.year_suffix = suffix;
    out.rest = std::string(ref.substr(end));
    out.year_begin = i;
    out.year_end = end;
    return out;
  }
  return std::nullopt;
}

HeadAndFillers extract_head_and_fillers(std::string_view rest) {
  HeadAndFillers out;
  bool pending_space = false;
  std::size_t i = 0;
  while (i < rest.size()) {
    const char c = rest[i];
    if (is_digit(c)) {
      Filler value = 0;
      while (i < rest.size() && is_digit(rest[i])) {
        value = value >= kFillerCap / 10 ? kFillerCap : value * 10 + (rest[i] - '0');
        ++i;
      }
      out.fillers.push_back(value);
      pending_space = !out.head.empty();
      continue;
    }
    if (is_alpha(c)) {
      if (pending_space) out.head.push_back(' ');
      pending_space = false;
      out.head.push_back(c);
    } else {
      pending_space = !out.head.empty();
    }
    ++i;
  }
  return out;
}

std::vector<SlotAssignment> fill_slots(const SlotTemplate& slot_template, std::span<const Filler> fillers) {
  const auto& slots = slot_template.slots;
  std::vector<SlotAssignment> out;
  if (fillers.size() == slots.size()) {
    SlotAssignment a;
    for (std::size_t k = 0; k < slots.size(); ++k) a.values[slots[k]] = fillers[k];
    out.push_back(std::move(a));
  } else if (fillers.size() == slots.size() + 1) {
    // Trailing fillers are the likeliest insertions ("; No. 199"), so drop from the end first.
    for (std::size_t drop = fillers.size(); drop-- > 0;) {
      SlotAssignment a;
      a.dropped_filler = drop;
      std::size_t k = 0;
      for (std::size_t f = 0; f < fillers.size(); ++f) {
        if (f != drop) a.values[slots[k++]] = fillers[f];
      }
      out.push_back(std::move(a));
    }
  } else if (fillers.size() + 1 == slots.size() && slots.size() == 2 && slots[0] == Slot::volume &&
             slots[1] == Slot::page) {
    SlotAssignment a;
    a.values[Slot::page] = fillers[0];
    a.volume_from_year = true;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace refres
