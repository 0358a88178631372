#pragma once

#include <set>
#include <string>
#include <vector>

#include "sysnet/text_structure.hpp"

namespace sysnet {

// Boolean expression over feature names. True is the entry condition of a
// root system; Ref evaluates a single feature; Not takes one argument;
// And/Or are n-ary (two or more arguments).
struct EntryCondition {
  enum class Kind { True, Ref, Not, And, Or };

  Kind kind = Kind::True;
  std::string name;                  // Ref only
  std::vector<EntryCondition> args;  // Not: 1, And/Or: >= 2

  bool operator==(const EntryCondition&) const = default;

  static EntryCondition truth();
  static EntryCondition ref(std::string name);
  static EntryCondition negation(EntryCondition arg);
  static EntryCondition conjunction(std::vector<EntryCondition> args);
  static EntryCondition disjunction(std::vector<EntryCondition> args);
};

// Evaluates cond against a set of active feature names; absent names are
// false. Total for well-formed conditions.
bool entry_satisfied(const EntryCondition& cond,
                     const std::set<std::string>& selected);

// Renders with minimal parentheses ('!' binds tightest, then '&', then '|').
std::string to_string(const EntryCondition& cond);

// Appends every referenced feature name (with repeats) to out.
void collect_refs(const EntryCondition& cond, std::vector<std::string>& out);

// One realization statement attached to a choice.
struct RealizationStatement {
  enum class Kind { Insert, Order, Mark, Combine, Demote };

  Kind kind = Kind::Insert;
  Role role_a;  // Insert/Mark/Demote target; Order first; Combine first
  Role role_b;  // Order second; Combine second
  MarkAttribute attribute = MarkAttribute::Linker;
  std::string value;  // Mark value token
  Boundary boundary = Boundary::SameSentence;

  bool operator==(const RealizationStatement&) const = default;
};

RealizationStatement insert_stmt(Role role);
RealizationStatement order_stmt(Role first, Role second);
RealizationStatement mark_linker_stmt(Role role, std::string token);
RealizationStatement mark_form_stmt(Role role, std::string token);
RealizationStatement combine_stmt(Role a, Role b, Boundary boundary);
RealizationStatement demote_stmt(Role role);

// Rendered in the same syntax the network DSL uses.
std::string to_string(const RealizationStatement& stmt);

struct Choice {
  std::string feature;
  std::vector<RealizationStatement> statements;

  bool operator==(const Choice&) const = default;
};

enum class UnitKind { System, Gate };

// A system (two or more alternative choices, resolved by a choice function)
// or a gate (a single feature selected whenever the entry holds).
struct ChoicePoint {
  UnitKind kind = UnitKind::System;
  std::string name;
  EntryCondition entry;
  std::vector<Choice> choices;

  bool operator==(const ChoicePoint&) const = default;
};

struct SystemNetwork {
  std::string name;
  std::vector<std::string> inputs;  // declared context pseudo-features
  std::vector<ChoicePoint> units;   // systems and gates in declaration order

  bool operator==(const SystemNetwork&) const = default;
  const ChoicePoint* find_unit(const std::string& name) const;
  // The unit whose choices contain the feature, or nullptr for inputs and
  // unknown names.
  const ChoicePoint* home_of(const std::string& feature) const;
};

struct ValidationIssue {
  enum class Severity { Error, Warning };

  Severity severity = Severity::Error;
  std::string code;     // stable identifier, e.g. "dangling-reference"
  std::string unit;     // offending system/gate name ("" when network-wide)
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;  // true iff no Error-severity issues
  std::vector<ValidationIssue> errors() const;
  std::vector<ValidationIssue> warnings() const;
};

std::string to_string(const ValidationReport& report);

// Checks: globally unique feature names (inputs included), resolvable entry
// references, acyclic entry dependencies, correct choice counts, statement
// vocabulary and role sanity. Unreachable units and duplicate unit names are
// reported as warnings.
ValidationReport validate_network(const SystemNetwork& net);

}  // namespace sysnet
