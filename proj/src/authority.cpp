// SPDX-License-Identifier: Apache-2.0

#include "refres/authority.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "refres/text.hpp"

namespace refres {

namespace {

std::uint32_t trigram_key(std::string_view s, std::size_t at) {
  return (static_cast<std::uint32_t>(static_cast<unsigned char>(s[at])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 1])) << 8) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 2]));
}

}  // namespace

int trigram_overlap(std::string_view a, std::string_view h) {
  if (h.size() < 3) return 0;
  int count = 0;
  for (std::size_t i = 0; i + 3 <= h.size(); ++i) {
    if (a.find(h.substr(i, 3)) != std::string_view::npos) ++count;
  }
  return count;
}

double source_similarity(int overlap, std::size_t a_length, std::size_t lev, std::size_t h_length) {
  if (h_length == 0) throw InvalidHeadError("empty head");
  return 1.0 - ((static_cast<double>(overlap) - static_cast<double>(a_length)) * static_cast<double>(lev)) /
                   static_cast<double>(h_length);
}

double source_similarity(std::string_view a, std::string_view h) {
  if (h.empty()) throw InvalidHeadError("empty head");
  return source_similarity(trigram_overlap(a, h), a.size(), levenshtein(a, h), h.size());
}

bool source_ranks_before(const SourceMatch& x, const SourceMatch& y, std::string_view folded_head) {
  const bool x_exact = x.entry->variant == folded_head;
  const bool y_exact = y.entry->variant == folded_head;
  if (x_exact != y_exact) return x_exact;
  return std::make_tuple(x.score, x.entry->variant.size(), std::cref(x.entry->bibstem), std::cref(x.entry->variant)) <
         std::make_tuple(y.score, y.entry->variant.size(), std::cref(y.entry->bibstem), std::cref(y.entry->variant));
}

AuthorityTable::AuthorityTable(std::vector<AuthorityEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const std::string& v = entries_[i].variant;
    if (v.empty()) throw Error("authority entry for '" + entries_[i].bibstem + "' has an empty variant");
    std::set<std::uint32_t> seen;
    for (std::size_t k = 0; k + 3 <= v.size(); ++k) {
      if (seen.insert(trigram_key(v, k)).second) postings_[trigram_key(v, k)].push_back(i);
    }
  }
}

std::vector<SourceMatch> AuthorityTable::n_best_sources(std::string_view head, std::size_t n) const {
  const std::string h = fold_source(head);
  if (h.empty() || entries_.empty() || n == 0) return {};

  std::vector<int> overlap(entries_.size(), 0);
  int best_overlap = 0;
  if (h.size() >= 3) {
    for (std::size_t k = 0; k + 3 <= h.size(); ++k) {
      auto it = postings_.find(trigram_key(h, k));
      if (it == postings_.end()) continue;
      for (std::size_t e : it->second) best_overlap = std::max(best_overlap, ++overlap[e]);
    }
  }
  const int cutoff = (best_overlap + 1) / 2;

  std::vector<SourceMatch> scored;
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    if (best_overlap > 0 && overlap[e] < cutoff) continue;
    const std::string& a = entries_[e].variant;
    const std::size_t lev = levenshtein(a, h);
    scored.push_back(SourceMatch{&entries_[e], source_similarity(overlap[e], a.size(), lev, h.size()), overlap[e],
                                 static_cast<int>(lev)});
  }
  std::sort(scored.begin(), scored.end(),
            [&h](const SourceMatch& x, const SourceMatch& y) { return source_ranks_before(x, y, h); });

  std::vector<SourceMatch> out;
  std::set<std::string_view> stems;
  for (const SourceMatch& m : scored) {
    if (out.size() == n) break;
    if (stems.insert(m.entry->bibstem).second) out.push_back(m);
  }
  return out;
}

}  // namespace refres
