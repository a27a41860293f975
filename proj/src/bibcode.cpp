// SPDX-License-Identifier: Apache-2.0

#include "refres/bibcode.hpp"

#include "refres/text.hpp"

namespace refres {

namespace {

void append_right_aligned(std::string& out, int value) {
  std::string digits = value == 0 ? std::string() : std::to_string(value);
  out.append(4 - digits.size(), '.');
  out += digits;
}

int parse_right_aligned(std::string_view field, std::string_view what) {
  std::size_t i = 0;
  while (i < field.size() && field[i] == '.') ++i;
  int value = 0;
  for (; i < field.size(); ++i) {
    if (!is_digit(field[i])) throw BibcodeError("bibcode " + std::string(what) + " is not numeric");
    value = value * 10 + (field[i] - '0');
  }
  return value;
}

bool valid_qualifier(char c) { return c == '.' || (c >= 'A' && c <= 'Z'); }
bool valid_initial(char c) { return c == '.' || (c >= 'A' && c <= 'Z'); }

}  // namespace

bool valid_bibstem(std::string_view bibstem) {
  if (bibstem.empty() || bibstem.size() > 5) return false;
  for (char c : bibstem) {
    if (c <= ' ' || c > '~' || c == '.') return false;
  }
  return true;
}

std::string Bibcode::text() const {
  std::string out;
  out.reserve(kLength);
  out += std::to_string(year);
  out += bibstem;
  out.append(5 - bibstem.size(), '.');
  append_right_aligned(out, volume);
  out.push_back(qualifier);
  append_right_aligned(out, page);
  out.push_back(author_initial);
  return out;
}

Bibcode build_bibcode(long year, std::string_view bibstem, long volume, char qualifier, long page,
                      char author_initial) {
  if (year < 1000 || year > 9999) throw BibcodeError("year " + std::to_string(year) + " is not 4-digit");
  if (!valid_bibstem(bibstem)) throw BibcodeError("invalid bibstem '" + std::string(bibstem) + "'");
  if (volume < 0 || volume > 9999) throw BibcodeError("volume " + std::to_string(volume) + " out of range");
  if (page < 0 || page > 9999) throw BibcodeError("page " + std::to_string(page) + " out of range");
  if (!valid_qualifier(qualifier)) throw BibcodeError(std::string("invalid qualifier '") + qualifier + "'");
  if (!valid_initial(author_initial)) {
    throw BibcodeError(std::string("invalid author initial '") + author_initial + "'");
  }
  return Bibcode{static_cast<int>(year), std::string(bibstem), static_cast<int>(volume), qualifier,
                 static_cast<int>(page), author_initial};
}

Bibcode parse_bibcode(std::string_view text) {
  if (text.size() != Bibcode::kLength) {
    throw BibcodeError("bibcode '" + std::string(text) + "' is not 19 characters");
  }
  int year = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_digit(text[i])) throw BibcodeError("bibcode year is not numeric");
    year = year * 10 + (text[i] - '0');
  }
  std::string_view stem = text.substr(4, 5);
  while (!stem.empty() && stem.back() == '.') stem.remove_suffix(1);
  const int volume = parse_right_aligned(text.substr(9, 4), "volume");
  const int page = parse_right_aligned(text.substr(14, 4), "page");
  return build_bibcode(year, stem, volume, text[13], page, text[18]);
}

}  // namespace refres
