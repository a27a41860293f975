// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace refres {

/// Reduces a raw (UTF-8) reference string to printable 7-bit ASCII.
///
/// ISO-8859-1 letters are transliterated ("ö" -> "o", "ß" -> "ss"), typographic
/// dashes and quotes become their ASCII forms, TeX escapes such as `\"o` or the
/// `\char'176` artifacts left by some OCR engines are resolved or stripped, and
/// everything else outside 32..126 is dropped. Whitespace runs collapse to a
/// single blank and the result is trimmed. Idempotent.
std::string normalize(std::string_view raw);

/// Lowercases letters and turns every other character into a separator, then
/// collapses separators to single blanks: "Ap. J." -> "ap j".
std::string fold_source(std::string_view s);

/// Unit-cost Levenshtein distance.
std::size_t levenshtein(std::string_view a, std::string_view b);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

inline bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }
inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace refres
