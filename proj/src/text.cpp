// SPDX-License-Identifier: Apache-2.0

#include "refres/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <vector>

namespace refres {

namespace {

// Transliterations for U+00C0..U+00FF; empty entries are dropped.
constexpr std::array<const char*, 64> kLatin1Letters = {
    "A", "A", "A", "A", "A", "A", "AE", "C",  // C0-C7
    "E", "E", "E", "E", "I", "I", "I",  "I",  // C8-CF
    "D", "N", "O", "O", "O", "O", "O",  "",   // D0-D7 (D7 is the multiplication sign)
    "O", "U", "U", "U", "U", "Y", "TH", "ss", // D8-DF
    "a", "a", "a", "a", "a", "a", "ae", "c",  // E0-E7
    "e", "e", "e", "e", "i", "i", "i",  "i",  // E8-EF
    "d", "n", "o", "o", "o", "o", "o",  "",   // F0-F7 (F7 is the division sign)
    "o", "u", "u", "u", "u", "y", "th", "y",  // F8-FF
};

void append_codepoint(std::string& out, std::uint32_t cp) {
  if (cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v') {
    out.push_back(' ');
  } else if (cp >= 32 && cp < 127) {
    out.push_back(static_cast<char>(cp));
  } else if (cp >= 0xC0 && cp <= 0xFF) {
    out += kLatin1Letters[cp - 0xC0];
  } else {
    switch (cp) {
      case 0xA0: out.push_back(' '); break;
      case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2212: out.push_back('-'); break;
      case 0x2014: case 0x2015: out += "---"; break;
      case 0x2018: case 0x2019: case 0x201A: case 0x2032: out.push_back('\''); break;
      case 0x201C: case 0x201D: case 0x201E: case 0x2033: out.push_back('"'); break;
      default: break;
    }
  }
}

// Decodes UTF-8, dropping malformed sequences.
std::string to_ascii(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    const auto b0 = static_cast<unsigned char>(raw[i]);
    int extra = 0;
    std::uint32_t cp = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= raw.size()) {
        ok = false;
        break;
      }
      const auto b = static_cast<unsigned char>(raw[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      ++i;
      continue;
    }
    append_codepoint(out, cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

bool is_accent_command(char c) {
  return c == '"' || c == '\'' || c == '`' || c == '^' || c == '~' || c == '=' || c == '.';
}

// One left-to-right pass over TeX escapes. Returns true if anything changed.
bool strip_tex_once(std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool changed = false;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '\\') {
      out.push_back(s[i++]);
      continue;
    }
    if (s.compare(i + 1, 4, "char") == 0) {
      // \char'ooo (octal), \char"hh (hex) or \char ddd; the code is dropped.
      std::size_t j = i + 5;
      const char radix = j < s.size() && (s[j] == '\'' || s[j] == '"') ? s[j++] : 'd';
      auto is_code_digit = [radix](char c) {
        if (radix == '\'') return c >= '0' && c <= '7';
        if (radix == '"') return std::isxdigit(static_cast<unsigned char>(c)) != 0;
        return c >= '0' && c <= '9';
      };
      const std::size_t max_digits = radix == '"' ? 2 : 3;
      for (std::size_t n = 0; n < max_digits && j < s.size() && is_code_digit(s[j]); ++n) ++j;
      changed = true;
      i = j;
      continue;
    }
    if (i + 1 < s.size() && is_accent_command(s[i + 1])) {
      std::size_t j = i + 2;
      const bool braced = j < s.size() && s[j] == '{';
      if (braced) ++j;
      if (j < s.size() && is_alpha(s[j])) {
        const char letter = s[j++];
        if (braced && j < s.size() && s[j] == '}') ++j;
        out.push_back(letter);
        changed = true;
        i = j;
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  if (changed) s = std::move(out);
  return changed;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string normalize(std::string_view raw) {
  std::string s = to_ascii(raw);
  while (strip_tex_once(s)) {
  }
  return collapse_whitespace(s);
}

std::string fold_source(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (!is_alpha(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c | 0x20));
  }
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t above = row[j + 1];
      const std::size_t substitution = diagonal + (a[i] == b[j] ? 0 : 1);
      row[j + 1] = std::min({above + 1, row[j] + 1, substitution});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && is_space(s[begin])) ++begin;
  while (end > begin && is_space(s[end - 1])) --end;
  return std::string(s.substr(begin, end - begin));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c | 0x20);
  }
  return out;
}

}  // namespace refres
