// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace refres {

/// `key = value` lines; blank lines and '#' comments are ignored. Quotes
/// around a value are stripped. Throws InputError on a line without '='.
std::map<std::string, std::string> parse_key_values(std::string_view text, const std::string& name);
std::map<std::string, std::string> load_key_values(const std::string& path);

bool parse_bool(std::string_view value, const std::string& key);
double parse_double(std::string_view value, const std::string& key);
long long parse_integer(std::string_view value, const std::string& key);
std::vector<std::string> split_list(std::string_view value, char separator = ',');

}  // namespace refres
