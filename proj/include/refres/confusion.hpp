// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

namespace refres {

/// Weighted single-character OCR confusions. The corpus generator samples
/// from it and the relaxed matcher derives its page misreadings from the
/// digit-to-digit part, so both sides of the channel share one table.
class ConfusionTable {
 public:
  struct Alternative {
    char to;
    double weight;
  };

  /// The built-in table: digit/letter classes (0-O-o, 1-l-I-i, 5-S-s, 8-B,
  /// 2-Z, 6-G), J-1, digit pairs such as 1-7 and 3-8, and a few letter pairs.
  static ConfusionTable defaults();

  void add(char from, char to, double weight);
  const std::vector<Alternative>& alternatives(char from) const;
  /// Digits `d` is confused with, in table order.
  std::vector<char> digit_alternatives(char d) const;
  bool empty() const { return table_.empty(); }
  const std::map<char, std::vector<Alternative>>& entries() const { return table_; }

 private:
  std::map<char, std::vector<Alternative>> table_;
};

}  // namespace refres
