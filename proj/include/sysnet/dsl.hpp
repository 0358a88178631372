#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysnet/network.hpp"

namespace sysnet {

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  std::string expected;  // token class hint; empty for semantic errors
};

std::string to_string(const ParseError& error);

struct ParseResult {
  std::optional<SystemNetwork> network;  // present iff errors is empty
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// Parses network DSL text. On success the result passes validate_network
// with zero errors; validator failures are reported as semantic ParseErrors
// with the position of the offending block.
//
// Sources without a `network` header parse in fragment mode: entry references
// that resolve to no feature are recorded as implicitly declared inputs.
// Sources with a header are strict.
ParseResult parse_network(const std::string& source);

// Canonical text form. parse_network(serialize_network(net)) reproduces net
// structurally for any valid network.
std::string serialize_network(const SystemNetwork& net);

}  // namespace sysnet
