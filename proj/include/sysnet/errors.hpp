#pragma once

#include <stdexcept>
#include <string>

namespace sysnet {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition of a text-structure operation: duplicate or missing
// role, closed-vocabulary violation, boundary between non-adjacent nodes.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Traversal-level failure: unresolved name, missing or misbehaving choice
// function, feature context not total over the declared inputs.
class GrammarError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or record: lexicon, semantic document, fixture.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace sysnet
