#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sysnet/network.hpp"
#include "sysnet/text_structure.hpp"

namespace sysnet {

// Input to a traversal: boolean/enumerated feature assignments consulted by
// choice functions, plus the action each inserted role should refer to.
struct FeatureContext {
  std::map<std::string, std::string> assignments;
  std::map<std::string, std::string> role_actions;

  bool flag(const std::string& name) const {
    auto it = assignments.find(name);
    return it != assignments.end() && it->second == "true";
  }

  std::string value_or(const std::string& name, std::string fallback) const {
    auto it = assignments.find(name);
    return it == assignments.end() ? std::move(fallback) : it->second;
  }
};

// Picks one of a system's features.  Must return a feature declared by the
// system it is registered for; anything else aborts the traversal.
using ChoiceFunction = std::function<std::string(const FeatureContext&)>;
using ChoiceTable = std::map<std::string, ChoiceFunction>;

struct FiredRecord {
  std::string unit;
  std::string feature;
  std::string entry;  // rendered entry condition, for explanations
  std::vector<std::string> statements;
};

// Records a later mark statement replacing an earlier value on the same
// role/attribute pair, e.g. a linker refinement.
struct MarkOverwrite {
  std::string unit;
  std::string role;
  std::string attribute;
  std::string old_value;
  std::string new_value;
};

struct TraversalTrace {
  std::set<std::string> selected;
  std::vector<FiredRecord> fired;
  TextStructure structure;
  std::vector<MarkOverwrite> overwrites;
  int scans = 0;
};

// Runs the network to its fixed point: repeatedly scans units in declaration
// order, firing each unit at most once when its entry condition is satisfied
// by the active inputs plus the features selected so far, and executing its
// realization statements immediately.  Stops when a scan fires nothing or
// every unit has fired.  Throws GrammarError for an unusable grammar or
// choice table (missing input assignment, missing or ill-behaved choice
// function, insert without a role action).
TraversalTrace traverse(const SystemNetwork& net, const FeatureContext& ctx,
                        const TextStructure& seed, const ChoiceTable& choices);

// Human-readable account of what fired and why, in firing order.
std::string explain(const TraversalTrace& trace);

// Deterministic machine-oriented rendering of the whole trace.
std::string dump(const TraversalTrace& trace);

}  // namespace sysnet
