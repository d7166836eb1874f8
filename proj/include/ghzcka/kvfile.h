#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ghz {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

// Parses `key = value` lines. `#` starts a comment; blank lines are skipped.
// Duplicate keys and lines without `=` are ConfigErrors.
std::vector<KeyValue> parse_key_values(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

// Decimal (locale-independent) or a ratio `x/y`.
double parse_number(std::string_view text);
int parse_int(std::string_view text);

}  // namespace ghz
