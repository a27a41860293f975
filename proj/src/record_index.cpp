// SPDX-License-Identifier: Apache-2.0

#include "refres/record_index.hpp"

#include <algorithm>

namespace refres {

RecordIndex::RecordIndex(std::vector<BibRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const BibRecord& r = records_[i];
    validate_record(r);
    auto [it, inserted] = by_bibcode_.emplace(r.bibcode.text(), i);
    if (!inserted) throw Error("duplicate bibcode " + it->first);

    by_initial_year_[{r.first_author_initial, r.year}].push_back(i);
    if (!has_bibstem(r.kind)) continue;

    auto& range = volume_year_[r.bibstem];
    auto [vy, fresh] = range.emplace(r.volume, YearRange{r.year, r.year});
    if (!fresh) {
      vy->second.first = std::min(vy->second.first, r.year);
      vy->second.last = std::max(vy->second.last, r.year);
    }
    year_volume_[r.bibstem][r.year].insert(r.volume);
    by_volume_[{r.bibstem, r.volume}].push_back(i);
  }
  for (auto& [key, members] : by_volume_) {
    std::sort(members.begin(), members.end(), [this](std::size_t a, std::size_t b) {
      return std::pair(records_[a].first_page, records_[a].bibcode.text()) <
             std::pair(records_[b].first_page, records_[b].bibcode.text());
    });
  }
}

const BibRecord* RecordIndex::lookup(std::string_view bibcode_text) const {
  auto it = by_bibcode_.find(bibcode_text);
  return it == by_bibcode_.end() ? nullptr : &records_[it->second];
}

std::vector<const BibRecord*> RecordIndex::lookup_first_author_wildcard(std::string_view bibcode_text) const {
  std::vector<const BibRecord*> out;
  if (bibcode_text.size() != Bibcode::kLength) return out;
  const std::string_view prefix = bibcode_text.substr(0, Bibcode::kLength - 1);
  for (auto it = by_bibcode_.lower_bound(prefix); it != by_bibcode_.end(); ++it) {
    if (it->first.compare(0, prefix.size(), prefix) != 0) break;
    out.push_back(&records_[it->second]);
  }
  return out;
}

std::optional<YearRange> RecordIndex::year_for_volume(std::string_view bibstem, int volume) const {
  auto stem = volume_year_.find(bibstem);
  if (stem == volume_year_.end()) return std::nullopt;
  auto it = stem->second.find(volume);
  if (it == stem->second.end()) return std::nullopt;
  return it->second;
}

std::set<int> RecordIndex::volumes_for_year(std::string_view bibstem, int year) const {
  auto stem = year_volume_.find(bibstem);
  if (stem == year_volume_.end()) return {};
  auto it = stem->second.find(year);
  if (it == stem->second.end()) return {};
  return it->second;
}

std::vector<const BibRecord*> RecordIndex::volume_records(std::string_view bibstem, int volume) const {
  std::vector<const BibRecord*> out;
  auto it = by_volume_.find({std::string(bibstem), volume});
  if (it == by_volume_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&records_[i]);
  return out;
}

std::vector<const BibRecord*> RecordIndex::by_initial_year(char initial, int year) const {
  std::vector<const BibRecord*> out;
  auto it = by_initial_year_.find({initial, year});
  if (it == by_initial_year_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&records_[i]);
  return out;
}

}  // namespace refres
