// SPDX-License-Identifier: Apache-2.0

#include "refres/confusion.hpp"

#include <algorithm>

#include "refres/text.hpp"

namespace refres {

ConfusionTable ConfusionTable::defaults() {
  ConfusionTable t;
  struct Row {
    char from;
    char to;
    double weight;
  };
  static constexpr Row kRows[] = {
      {'0', 'o', 3}, {'0', 'O', 2}, {'0', '8', 1}, {'0', '6', 0.5},
      {'1', 'l', 3}, {'1', 'I', 2}, {'1', '7', 2}, {'1', 'i', 0.5}, {'1', '4', 0.5},
      {'2', 'Z', 1}, {'2', '7', 0.5},
      {'3', '8', 2}, {'3', '5', 0.5},
      {'4', '1', 0.5},
      {'5', 'S', 2}, {'5', 's', 1}, {'5', '6', 1.5}, {'5', '3', 0.5},
      {'6', 'G', 1}, {'6', '5', 1.5}, {'6', '8', 1}, {'6', '0', 0.5},
      {'7', '1', 2},
      {'8', 'B', 2}, {'8', '3', 2}, {'8', '6', 1}, {'8', '0', 1},
      {'9', 'g', 1}, {'9', '0', 0.5},
      {'o', '0', 2}, {'o', 'c', 0.5}, {'O', '0', 3},
      {'l', '1', 2}, {'l', 'I', 1}, {'I', '1', 2}, {'I', 'l', 1}, {'i', 'l', 1},
      {'S', '5', 2}, {'s', '5', 1}, {'B', '8', 2}, {'Z', '2', 1}, {'G', '6', 1},
      {'J', '1', 2}, {'J', 'I', 1}, {'J', 'l', 1},
      {'h', 'b', 2}, {'b', 'h', 1}, {'e', 'c', 1}, {'c', 'e', 1},
      {'u', 'n', 1}, {'n', 'u', 1}, {'t', 'f', 0.5}, {'f', 't', 0.5},
  };
  for (const Row& r : kRows) t.add(r.from, r.to, r.weight);
  return t;
}

void ConfusionTable::add(char from, char to, double weight) {
  if (from == to || weight <= 0.0) return;
  auto& alts = table_[from];
  for (auto& a : alts) {
    if (a.to == to) {
      a.weight = weight;
      return;
    }
  }
  alts.push_back({to, weight});
}

const std::vector<ConfusionTable::Alternative>& ConfusionTable::alternatives(char from) const {
  static const std::vector<Alternative> kNone;
  auto it = table_.find(from);
  return it == table_.end() ? kNone : it->second;
}

std::vector<char> ConfusionTable::digit_alternatives(char d) const {
  std::vector<char> out;
  for (const auto& [from, alts] : table_) {
    for (const auto& a : alts) {
      if (!is_digit(from) || !is_digit(a.to)) continue;
      if (from == d) out.push_back(a.to);
      if (a.to == d) out.push_back(from);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace refres
