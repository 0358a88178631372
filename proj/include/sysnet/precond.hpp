#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysnet/network.hpp"
#include "sysnet/text_structure.hpp"
#include "sysnet/traversal.hpp"

namespace sysnet {

// --- Semantic vocabulary -----------------------------------------------

enum class Probability { High, NotHigh };
enum class LogicalNature { Simple, Exclusive, Disjunctive };
enum class ActorType { Reader, NonReader };
enum class ActionCategory { Monitor, Giving, Placing, HabitualDecision, Other };
enum class ClauseComplexity { Normal, LongOrComplex };
enum class Slot { Fronted, AfterNucleus };
enum class Combining { Combined, Separate };

std::string to_string(Probability value);
std::string to_string(LogicalNature value);
std::string to_string(ActorType value);
std::string to_string(ActionCategory value);
std::string to_string(ClauseComplexity value);
std::string to_string(Slot value);
std::string to_string(Combining value);

std::optional<Probability> probability_from_token(const std::string& token);
std::optional<LogicalNature> logical_nature_from_token(
    const std::string& token);
std::optional<ActorType> actor_from_token(const std::string& token);
std::optional<ActionCategory> category_from_token(const std::string& token);
std::optional<ClauseComplexity> complexity_from_token(const std::string& token);
std::optional<Slot> slot_from_token(const std::string& token);
std::optional<Combining> combining_from_token(const std::string& token);

// Everything the grammar consults about one precondition/nucleus pair.
struct PrecondContext {
  bool conditional = true;  // the action is a precondition of its nucleus
  Probability probability = Probability::High;
  bool changeable = false;  // the reader can bring the condition about
  LogicalNature logical_nature = LogicalNature::Simple;
  bool thematic = false;  // the nucleus carries the theme of the step
  bool obvious = false;   // the condition needs no foregrounding
  ActorType actor = ActorType::Reader;
  ActionCategory category = ActionCategory::Other;
  bool repeated_mention = false;  // the action was mentioned before
  ClauseComplexity complexity = ClauseComplexity::Normal;
  bool inception_witnessed = false;  // the reader perceives the onset
  bool nominalized = false;          // realized as a noun phrase

  bool operator==(const PrecondContext&) const = default;
};

// --- Lexicon --------------------------------------------------------------

// Canned clause variants for one action. Availability of a grammatical form
// is derived from the presence of the corresponding field.
struct LexicalEntry {
  std::string action_id;
  std::optional<std::string> imperative_form;
  std::optional<std::string> present_active_clause;
  std::optional<std::string> agentless_passive_clause;
  std::optional<std::string> relational_state_clause;
  std::optional<std::string> nominal_phrase;
  std::optional<std::string> sensing_clause;
  std::optional<std::string> alternate_clause;  // second disjunct of whether/or

  bool active_available() const { return present_active_clause.has_value(); }
  bool relational_available() const {
    return relational_state_clause.has_value();
  }
  bool nominal_available() const { return nominal_phrase.has_value(); }
};

struct Lexicon {
  std::map<std::string, LexicalEntry> entries;

  const LexicalEntry* find(const std::string& action_id) const;
  const LexicalEntry& require(const std::string& action_id) const;  // InputError
};

// Parses blank-line-separated records of `key: value` lines ('#' comments).
// Duplicate action ids or unknown keys raise InputError.
Lexicon parse_lexicon(const std::string& text);

// --- Decisions ------------------------------------------------------------

struct Decisions {
  Slot slot = Slot::Fronted;
  Linker linker = Linker::None;
  Form form = Form::PresentActive;
  Combining combining = Combining::Combined;

  bool operator==(const Decisions&) const = default;
};

std::string to_string(const Decisions& decisions);

// Consistency requirements a context/lexicon pair must meet before any
// decision is attempted. Empty means valid.
std::vector<std::string> context_violations(const PrecondContext& ctx,
                                            const LexicalEntry& entry);

// Rule-form restatements of the shipped network, one dimension each.
Slot decide_slot(const PrecondContext& ctx);
Linker decide_linker(const PrecondContext& ctx);
Form decide_form(const PrecondContext& ctx, const LexicalEntry& entry);
Combining decide_combining(const PrecondContext& ctx);

// All four dimensions. Validates the context (InputError on violations),
// runs the shipped network, and cross-checks the traversal result against
// the rule-form restatements (GrammarError on disagreement).
Decisions decide_all(const PrecondContext& ctx, const LexicalEntry& entry);

// --- Shipped network --------------------------------------------------

// Source text of the embedded precondition-expression network.
const std::string& precondition_grammar_text();

// The embedded precondition-expression network, parsed once.
const SystemNetwork& precondition_network();

// Choice functions for every system in the shipped network.
const ChoiceTable& precondition_choices();

// Feature assignments and role actions the shipped network expects.
FeatureContext encode_context(const PrecondContext& ctx,
                              const LexicalEntry& precond_entry,
                              const std::string& nucleus_action);

// Runs a network over one precondition/nucleus pair; the two-network-argument
// overload allows a grammar loaded from disk in place of the shipped one.
TraversalTrace traverse_precondition(const PrecondContext& ctx,
                                     const LexicalEntry& precond_entry,
                                     const std::string& nucleus_action);
TraversalTrace traverse_precondition(const SystemNetwork& net,
                                     const PrecondContext& ctx,
                                     const LexicalEntry& precond_entry,
                                     const std::string& nucleus_action);

// Reads the four decisions back out of a realized pair structure.
Decisions decisions_from_structure(const TextStructure& ts);

// --- Documents --------------------------------------------------------

// One record of a semantic document: a main action, or a precondition
// attached to a main action via nucleus-of.
struct SemanticRecord {
  std::string action_id;
  std::optional<std::string> nucleus_of;
  std::optional<PrecondContext> context;       // preconditions only
  std::optional<bool> repeated_override;       // explicit repeated-mention
  Form node_form = Form::Imperative;           // main actions only
};

std::vector<SemanticRecord> parse_semantic(const std::string& text);

struct DocumentPlan {
  struct Group {
    std::string nucleus_id;
    std::vector<std::string> precond_ids;
    TextStructure structure;
    std::vector<TraversalTrace> traces;  // one per precondition
  };

  std::vector<Group> groups;
};

// Plans every step: traverses each precondition/nucleus pair, merges the
// pair structures into one per-step structure (fronted preconditions first,
// then the nucleus, then postposed ones), and threads repeated-mention
// through document order unless a record overrides it. The three-argument
// overload plans with a caller-supplied network.
DocumentPlan plan_document(const std::vector<SemanticRecord>& records,
                           const Lexicon& lexicon);
DocumentPlan plan_document(const std::vector<SemanticRecord>& records,
                           const Lexicon& lexicon, const SystemNetwork& net);

}  // namespace sysnet
