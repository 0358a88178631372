#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sysnet {

// One record of a line-oriented data file: `key: value` lines in order.
// Records are separated by blank lines; lines starting with '#' are comments.
struct KeyValueRecord {
  int line = 1;  // line number of the record's first field
  std::vector<std::pair<std::string, std::string>> fields;

  // First value for key, or nullptr. Duplicate keys are rejected at parse
  // time, so a record holds at most one value per key.
  const std::string* get(const std::string& key) const;
  // As get, but raises InputError naming the key and record line.
  const std::string& require(const std::string& key) const;
};

std::optional<bool> bool_from_token(const std::string& token);

// Splits text into records. Raises InputError for a line without ':' or a
// key repeated within one record.
std::vector<KeyValueRecord> parse_records(const std::string& text);

}  // namespace sysnet
