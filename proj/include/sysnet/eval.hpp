#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sysnet/precond.hpp"

namespace sysnet {

// One recorded corpus example: a precondition/nucleus pair, its semantic
// context, an inline lexicon, the frozen decisions the engine is expected to
// reproduce, and optionally the corpus value where it is known to differ
// (corpus-<dimension> plus a known-mismatch entry).
struct Fixture {
  std::string id;
  std::string source;  // free-text provenance label
  std::string precond_action;
  std::string nucleus_action;
  Form nucleus_form = Form::Imperative;
  PrecondContext context;
  Lexicon lexicon;
  Decisions expected;
  std::map<std::string, std::string> corpus_overrides;  // dimension -> token
  std::set<std::string> known_mismatches;               // dimension names
  std::optional<std::string> expected_text;
};

Fixture parse_fixture(const std::string& text);

// Every *.fix file in the directory, in path order. InputError when the
// directory is unreadable or holds no fixtures.
std::vector<Fixture> load_fixture_dir(const std::string& dir);

struct DimensionResult {
  std::string dimension;
  std::string predicted;
  std::string expected;  // frozen prediction from the fixture
  std::string corpus;    // corpus value (expected unless overridden)
  bool regression_match = false;
  bool corpus_match = false;
  bool whitelisted = false;  // listed under known-mismatch
};

struct FixtureResult {
  std::string id;
  std::vector<DimensionResult> dimensions;
  bool hard_fail = false;
  std::string failure;  // set when the engine threw
};

struct Evaluation {
  std::vector<FixtureResult> fixtures;  // sorted by id

  // True when nothing hard-failed and every corpus mismatch is whitelisted.
  bool pass() const;
};

// Runs one fixture. A frozen prediction that no longer matches, a text
// mismatch, or an exception makes the result a hard failure; only corpus
// divergence can be whitelisted.
FixtureResult run_fixture(const Fixture& fixture);

// Runs every fixture. InputError on an empty set or duplicate ids.
Evaluation evaluate(const std::vector<Fixture>& fixtures);

// Line-oriented report: one block per fixture/dimension pair, then one
// summary block per dimension, then "result: pass|fail".
std::string machine_report(const Evaluation& evaluation);

// Fixed-width table for terminals. The id column width honours the
// SYSNET_WIDTH environment variable (default 12, clamped to 8..64).
std::string human_report(const Evaluation& evaluation);

}  // namespace sysnet
