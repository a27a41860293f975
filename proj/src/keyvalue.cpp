// SPDX-License-Identifier: Apache-2.0

#include "refres/keyvalue.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "refres/error.hpp"
#include "refres/text.hpp"

namespace refres {

std::map<std::string, std::string> parse_key_values(std::string_view text, const std::string& name) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) throw InputError(name, line_no, "line", "expected key = value");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw InputError(name, line_no, "key", "empty key");
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str(), path);
}

bool parse_bool(std::string_view value, const std::string& key) {
  const std::string v = to_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(key + ": expected a boolean, got '" + std::string(value) + "'");
}

double parse_double(std::string_view value, const std::string& key) {
  try {
    std::size_t used = 0;
    const std::string v(value);
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw Error(key + ": expected a number, got '" + std::string(value) + "'");
  }
}

long long parse_integer(std::string_view value, const std::string& key) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(key + ": expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value, char separator) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= value.size(); ++i) {
    if (i < value.size() && value[i] != separator) continue;
    std::string item = trim(value.substr(start, i - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = i + 1;
  }
  return out;
}

}  // namespace refres
