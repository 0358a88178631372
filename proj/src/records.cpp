#include "sysnet/records.hpp"

#include <sstream>

#include "sysnet/errors.hpp"

namespace sysnet {

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

const std::string* KeyValueRecord::get(const std::string& key) const {
  for (const auto& [name, value] : fields)
    if (name == key) return &value;
  return nullptr;
}

const std::string& KeyValueRecord::require(const std::string& key) const {
  const std::string* value = get(key);
  if (!value)
    throw InputError("record at line " + std::to_string(line) +
                     " lacks required key '" + key + "'");
  return *value;
}

std::optional<bool> bool_from_token(const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  return std::nullopt;
}

std::vector<KeyValueRecord> parse_records(const std::string& text) {
  std::vector<KeyValueRecord> records;
  KeyValueRecord current;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto flush = [&] {
    if (!current.fields.empty()) records.push_back(std::move(current));
    current = KeyValueRecord{};
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string stripped = trim(raw);
    if (stripped.empty()) {
      flush();
      continue;
    }
    if (stripped[0] == '#') continue;
    size_t colon = stripped.find(':');
    if (colon == std::string::npos)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected 'key: value', got '" + stripped + "'");
    std::string key = trim(stripped.substr(0, colon));
    std::string value = trim(stripped.substr(colon + 1));
    if (key.empty())
      throw InputError("line " + std::to_string(lineno) + ": empty key");
    if (current.fields.empty()) current.line = lineno;
    if (current.get(key))
      throw InputError("line " + std::to_string(lineno) + ": key '" + key +
                       "' repeated within one record");
    current.fields.emplace_back(std::move(key), std::move(value));
  }
  flush();
  return records;
}

}  // namespace sysnet
