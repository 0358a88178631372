#include "sysnet/precond.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sysnet/dsl.hpp"
#include "sysnet/errors.hpp"
#include "sysnet/records.hpp"

namespace sysnet {

// --- Vocabulary tokens ------------------------------------------------

std::string to_string(Probability value) {
  return value == Probability::High ? "HIGH" : "NOT-HIGH";
}

std::string to_string(LogicalNature value) {
  switch (value) {
    case LogicalNature::Simple: return "SIMPLE";
    case LogicalNature::Exclusive: return "EXCLUSIVE";
    case LogicalNature::Disjunctive: return "DISJUNCTIVE";
  }
  return "SIMPLE";
}

std::string to_string(ActorType value) {
  return value == ActorType::Reader ? "READER" : "NON-READER";
}

std::string to_string(ActionCategory value) {
  switch (value) {
    case ActionCategory::Monitor: return "MONITOR";
    case ActionCategory::Giving: return "GIVING";
    case ActionCategory::Placing: return "PLACING";
    case ActionCategory::HabitualDecision: return "HABITUAL-DECISION";
    case ActionCategory::Other: return "OTHER";
  }
  return "OTHER";
}

std::string to_string(ClauseComplexity value) {
  return value == ClauseComplexity::Normal ? "NORMAL" : "LONG-OR-COMPLEX";
}

std::string to_string(Slot value) {
  return value == Slot::Fronted ? "FRONTED" : "AFTER-NUCLEUS";
}

std::string to_string(Combining value) {
  return value == Combining::Combined ? "COMBINED" : "SEPARATE";
}

namespace {

template <typename Enum, size_t N>
std::optional<Enum> lookup(const std::pair<const char*, Enum> (&table)[N],
                           const std::string& token) {
  for (const auto& [name, value] : table)
    if (token == name) return value;
  return std::nullopt;
}

}  // namespace

std::optional<Probability> probability_from_token(const std::string& token) {
  static const std::pair<const char*, Probability> table[] = {
      {"HIGH", Probability::High}, {"NOT-HIGH", Probability::NotHigh}};
  return lookup(table, token);
}

std::optional<LogicalNature> logical_nature_from_token(
    const std::string& token) {
  static const std::pair<const char*, LogicalNature> table[] = {
      {"SIMPLE", LogicalNature::Simple},
      {"EXCLUSIVE", LogicalNature::Exclusive},
      {"DISJUNCTIVE", LogicalNature::Disjunctive}};
  return lookup(table, token);
}

std::optional<ActorType> actor_from_token(const std::string& token) {
  static const std::pair<const char*, ActorType> table[] = {
      {"READER", ActorType::Reader}, {"NON-READER", ActorType::NonReader}};
  return lookup(table, token);
}

std::optional<ActionCategory> category_from_token(const std::string& token) {
  static const std::pair<const char*, ActionCategory> table[] = {
      {"MONITOR", ActionCategory::Monitor},
      {"GIVING", ActionCategory::Giving},
      {"PLACING", ActionCategory::Placing},
      {"HABITUAL-DECISION", ActionCategory::HabitualDecision},
      {"OTHER", ActionCategory::Other}};
  return lookup(table, token);
}

std::optional<ClauseComplexity> complexity_from_token(
    const std::string& token) {
  static const std::pair<const char*, ClauseComplexity> table[] = {
      {"NORMAL", ClauseComplexity::Normal},
      {"LONG-OR-COMPLEX", ClauseComplexity::LongOrComplex}};
  return lookup(table, token);
}

std::optional<Slot> slot_from_token(const std::string& token) {
  static const std::pair<const char*, Slot> table[] = {
      {"FRONTED", Slot::Fronted}, {"AFTER-NUCLEUS", Slot::AfterNucleus}};
  return lookup(table, token);
}

std::optional<Combining> combining_from_token(const std::string& token) {
  static const std::pair<const char*, Combining> table[] = {
      {"COMBINED", Combining::Combined}, {"SEPARATE", Combining::Separate}};
  return lookup(table, token);
}

// --- Lexicon --------------------------------------------------------------

const LexicalEntry* Lexicon::find(const std::string& action_id) const {
  auto it = entries.find(action_id);
  return it == entries.end() ? nullptr : &it->second;
}

const LexicalEntry& Lexicon::require(const std::string& action_id) const {
  const LexicalEntry* entry = find(action_id);
  if (!entry)
    throw InputError("lexicon has no entry for action '" + action_id + "'");
  return *entry;
}

namespace {

void check_availability_flag(const LexicalEntry& entry, const std::string& key,
                             const std::string& value, bool derived) {
  std::optional<bool> declared = bool_from_token(value);
  if (!declared)
    throw InputError("lexicon entry '" + entry.action_id + "': " + key +
                     " must be true or false");
  if (*declared != derived)
    throw InputError("lexicon entry '" + entry.action_id + "' declares " +
                     key + ": " + value +
                     " but its clause fields say otherwise");
}

}  // namespace

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lexicon;
  for (const KeyValueRecord& record : parse_records(text)) {
    LexicalEntry entry;
    entry.action_id = record.require("action");
    std::vector<std::pair<std::string, std::string>> flags;
    for (const auto& [key, value] : record.fields) {
      if (key == "action") {
      } else if (key == "imperative") {
        entry.imperative_form = value;
      } else if (key == "present-active") {
        entry.present_active_clause = value;
      } else if (key == "agentless-passive") {
        entry.agentless_passive_clause = value;
      } else if (key == "relational-state") {
        entry.relational_state_clause = value;
      } else if (key == "nominal-phrase") {
        entry.nominal_phrase = value;
      } else if (key == "sensing") {
        entry.sensing_clause = value;
      } else if (key == "alternate-clause") {
        entry.alternate_clause = value;
      } else if (key == "active-available" || key == "relational-available" ||
                 key == "nominal-available") {
        flags.emplace_back(key, value);
      } else {
        throw InputError("lexicon entry '" + entry.action_id +
                         "': unknown key '" + key + "'");
      }
    }
    for (const auto& [key, value] : flags) {
      bool derived = key == "active-available"       ? entry.active_available()
                     : key == "relational-available" ? entry.relational_available()
                                                     : entry.nominal_available();
      check_availability_flag(entry, key, value, derived);
    }
    if (!lexicon.entries.emplace(entry.action_id, entry).second)
      throw InputError("duplicate lexicon entry '" + entry.action_id + "'");
  }
  return lexicon;
}

// --- Decisions ------------------------------------------------------------

std::string to_string(const Decisions& decisions) {
  std::ostringstream os;
  os << "slot=" << to_string(decisions.slot) << " linker=\""
     << to_string(decisions.linker) << "\" form=" << to_string(decisions.form)
     << " combining=" << to_string(decisions.combining);
  return os.str();
}

std::vector<std::string> context_violations(const PrecondContext& ctx,
                                            const LexicalEntry& entry) {
  std::vector<std::string> violations;
  if (!ctx.conditional)
    violations.push_back("a precondition must set conditional: true");
  if (ctx.nominalized) {
    if (!ctx.obvious)
      violations.push_back("nominalized requires obvious: true");
    if (!entry.nominal_available())
      violations.push_back(
          "nominalized requires a nominal-phrase lexicon field");
    if (ctx.category != ActionCategory::Other)
      violations.push_back("nominalized requires category OTHER");
    if (ctx.actor != ActorType::NonReader)
      violations.push_back("nominalized requires actor NON-READER");
    if (ctx.changeable)
      violations.push_back("nominalized excludes changeable");
  }
  if (ctx.changeable) {
    if (ctx.logical_nature != LogicalNature::Simple)
      violations.push_back("changeable requires logical-nature SIMPLE");
    if (ctx.thematic) violations.push_back("changeable excludes thematic");
  }
  return violations;
}

Slot decide_slot(const PrecondContext& ctx) {
  bool postposed = ctx.thematic || ctx.nominalized ||
                   ctx.logical_nature == LogicalNature::Exclusive ||
                   ctx.logical_nature == LogicalNature::Disjunctive;
  return postposed ? Slot::AfterNucleus : Slot::Fronted;
}

Linker decide_linker(const PrecondContext& ctx) {
  if (ctx.changeable || ctx.category == ActionCategory::Monitor)
    return Linker::None;
  if (ctx.probability == Probability::High)
    return ctx.nominalized ? Linker::After : Linker::When;
  switch (ctx.logical_nature) {
    case LogicalNature::Simple: return Linker::If;
    case LogicalNature::Exclusive: return Linker::OnlyIf;
    case LogicalNature::Disjunctive: return Linker::WhetherOr;
  }
  return Linker::If;
}

Form decide_form(const PrecondContext& ctx, const LexicalEntry& entry) {
  if (ctx.changeable) return Form::MakeSureImperative;
  switch (ctx.category) {
    case ActionCategory::Monitor: return Form::MonitorImperative;
    case ActionCategory::Giving:
    case ActionCategory::Placing: return Form::RelationalState;
    case ActionCategory::HabitualDecision: return Form::PresentActive;
    case ActionCategory::Other: break;
  }
  if (ctx.actor == ActorType::Reader)
    return ctx.repeated_mention ? Form::PresentAgentlessPassive
                                : Form::PresentActive;
  if (ctx.nominalized) return Form::NominalPhrase;
  if (ctx.complexity == ClauseComplexity::Normal) {
    if (entry.active_available()) return Form::PresentActive;
    if (ctx.inception_witnessed) return Form::SensingPresent;
  }
  return entry.relational_available() ? Form::RelationalState
                                      : Form::PresentAgentlessPassive;
}

Combining decide_combining(const PrecondContext& ctx) {
  bool separate = ctx.changeable || ctx.category == ActionCategory::Monitor;
  return separate ? Combining::Separate : Combining::Combined;
}

Decisions decide_all(const PrecondContext& ctx, const LexicalEntry& entry) {
  std::vector<std::string> violations = context_violations(ctx, entry);
  if (!violations.empty()) {
    std::string message = "invalid precondition context";
    if (!entry.action_id.empty()) message += " for '" + entry.action_id + "'";
    for (const auto& violation : violations) message += "; " + violation;
    throw InputError(message);
  }
  Decisions ruled{decide_slot(ctx), decide_linker(ctx),
                  decide_form(ctx, entry), decide_combining(ctx)};
  TraversalTrace trace = traverse_precondition(ctx, entry, "nucleus");
  Decisions traversed = decisions_from_structure(trace.structure);
  if (!(ruled == traversed))
    throw GrammarError("network and rule restatement disagree: network " +
                       to_string(traversed) + " vs rules " + to_string(ruled));
  return ruled;
}

// --- Shipped network --------------------------------------------------

const SystemNetwork& precondition_network() {
  static const SystemNetwork net = [] {
    ParseResult result = parse_network(precondition_grammar_text());
    if (!result.ok()) {
      std::string message = "embedded network failed to parse:";
      for (const auto& error : result.errors)
        message += "\n  " + to_string(error);
      throw GrammarError(message);
    }
    return *std::move(result.network);
  }();
  return net;
}

const ChoiceTable& precondition_choices() {
  static const ChoiceTable table = {
      {"Precond-Slot",
       [](const FeatureContext& fc) -> std::string {
         return fc.flag("thematic") ? "Thematic-Nucleus"
                                    : "Non-Thematic-Nucleus";
       }},
      {"Changeable-Type",
       [](const FeatureContext& fc) -> std::string {
         return fc.flag("changeable") ? "Changeable-Precond"
                                      : "Not-Changeable-Precond";
       }},
      {"Condition-Probability",
       [](const FeatureContext& fc) -> std::string {
         return fc.value_or("probability", "") == "HIGH"
                    ? "High-Probability"
                    : "Not-High-Probability";
       }},
      {"Complexity",
       [](const FeatureContext& fc) -> std::string {
         std::string nature = fc.value_or("logical-nature", "SIMPLE");
         if (nature == "EXCLUSIVE") return "Exclusive-Nature";
         if (nature == "DISJUNCTIVE") return "Disjunctive-Nature";
         return "Simple-Nature";
       }},
      {"Action-Category",
       [](const FeatureContext& fc) -> std::string {
         std::string category = fc.value_or("category", "OTHER");
         if (category == "MONITOR") return "Monitor-Action";
         if (category == "GIVING") return "Giving-Action";
         if (category == "PLACING") return "Placing-Action";
         if (category == "HABITUAL-DECISION") return "Habitual-Decision";
         return "Other-Action";
       }},
      {"Actor-Type",
       [](const FeatureContext& fc) -> std::string {
         return fc.value_or("actor", "") == "READER" ? "Reader-Action"
                                                     : "Non-Reader-Action";
       }},
      {"Act-Hide",
       [](const FeatureContext& fc) -> std::string {
         return fc.value_or("complexity", "") == "LONG-OR-COMPLEX"
                    ? "Hidden-Action"
                    : "Overt-Action";
       }},
      {"Active-Available",
       [](const FeatureContext& fc) -> std::string {
         return fc.flag("active-available") ? "Active-Form-Available"
                                            : "Active-Form-Unavailable";
       }},
      {"Inception-Status",
       [](const FeatureContext& fc) -> std::string {
         return fc.flag("inception-witnessed") ? "Witnessed-Inception"
                                               : "Unwitnessed-Inception";
       }},
      {"Termination-Availability",
       [](const FeatureContext& fc) -> std::string {
         return fc.flag("relational-available") ? "Relational-Form-Available"
                                                : "Relational-Form-Unavailable";
       }},
  };
  return table;
}

FeatureContext encode_context(const PrecondContext& ctx,
                              const LexicalEntry& precond_entry,
                              const std::string& nucleus_action) {
  auto flag = [](bool value) { return value ? "true" : "false"; };
  FeatureContext fc;
  fc.assignments["Conditional-Action"] = flag(ctx.conditional);
  fc.assignments["Nominalized"] = flag(ctx.nominalized);
  fc.assignments["Repeated-Mention"] = flag(ctx.repeated_mention);
  fc.assignments["Exclusive-Condition"] =
      flag(ctx.logical_nature == LogicalNature::Exclusive);
  fc.assignments["Disjunctive-Condition"] =
      flag(ctx.logical_nature == LogicalNature::Disjunctive);
  fc.assignments["probability"] = to_string(ctx.probability);
  fc.assignments["changeable"] = flag(ctx.changeable);
  fc.assignments["logical-nature"] = to_string(ctx.logical_nature);
  fc.assignments["thematic"] = flag(ctx.thematic);
  fc.assignments["obvious"] = flag(ctx.obvious);
  fc.assignments["actor"] = to_string(ctx.actor);
  fc.assignments["category"] = to_string(ctx.category);
  fc.assignments["complexity"] = to_string(ctx.complexity);
  fc.assignments["inception-witnessed"] = flag(ctx.inception_witnessed);
  fc.assignments["active-available"] = flag(precond_entry.active_available());
  fc.assignments["relational-available"] =
      flag(precond_entry.relational_available());
  fc.assignments["nominal-available"] = flag(precond_entry.nominal_available());
  fc.role_actions["Precond"] = precond_entry.action_id;
  fc.role_actions["Nucleus"] = nucleus_action;
  return fc;
}

TraversalTrace traverse_precondition(const PrecondContext& ctx,
                                     const LexicalEntry& precond_entry,
                                     const std::string& nucleus_action) {
  return traverse_precondition(precondition_network(), ctx, precond_entry,
                               nucleus_action);
}

TraversalTrace traverse_precondition(const SystemNetwork& net,
                                     const PrecondContext& ctx,
                                     const LexicalEntry& precond_entry,
                                     const std::string& nucleus_action) {
  return traverse(net, encode_context(ctx, precond_entry, nucleus_action),
                  TextStructure{}, precondition_choices());
}

Decisions decisions_from_structure(const TextStructure& ts) {
  int precond = ts.index_of(kPrecond);
  int nucleus = ts.index_of(kNucleus);
  if (precond < 0 || nucleus < 0)
    throw StructureError("structure lacks a Precond/Nucleus pair");
  if (std::abs(precond - nucleus) != 1)
    throw StructureError("Precond and Nucleus are not adjacent");
  const TextNode& node = ts.nodes[precond];
  if (!node.form)
    throw StructureError("Precond node carries no grammatical form");
  Decisions decisions;
  decisions.slot = precond < nucleus ? Slot::Fronted : Slot::AfterNucleus;
  decisions.linker = node.linker;
  decisions.form = *node.form;
  decisions.combining =
      ts.boundaries[std::min(precond, nucleus)] == Boundary::SeparateSentence
          ? Combining::Separate
          : Combining::Combined;
  return decisions;
}

// --- Documents --------------------------------------------------------

namespace {

bool parse_flag_field(const KeyValueRecord& record, const std::string& key) {
  std::optional<bool> value = bool_from_token(record.require(key));
  if (!value)
    throw InputError("record at line " + std::to_string(record.line) + ": " +
                     key + " must be true or false");
  return *value;
}

template <typename Enum>
Enum parse_enum_field(const KeyValueRecord& record, const std::string& key,
                      std::optional<Enum> (*from_token)(const std::string&)) {
  const std::string& token = record.require(key);
  std::optional<Enum> value = from_token(token);
  if (!value)
    throw InputError("record at line " + std::to_string(record.line) + ": '" +
                     token + "' is not a valid " + key);
  return *value;
}

const std::set<std::string> kPrecondKeys = {
    "action",    "nucleus-of", "conditional",      "probability",
    "changeable", "logical-nature", "thematic",    "obvious",
    "actor",     "category",   "repeated-mention", "complexity",
    "inception-witnessed", "nominalized"};

const std::set<std::string> kMainKeys = {"action", "form"};

}  // namespace

std::vector<SemanticRecord> parse_semantic(const std::string& text) {
  std::vector<SemanticRecord> records;
  for (const KeyValueRecord& raw : parse_records(text)) {
    SemanticRecord record;
    record.action_id = raw.require("action");
    bool precondition = raw.get("nucleus-of") != nullptr;
    const std::set<std::string>& allowed =
        precondition ? kPrecondKeys : kMainKeys;
    for (const auto& [key, value] : raw.fields)
      if (!allowed.count(key))
        throw InputError("record '" + record.action_id + "' at line " +
                         std::to_string(raw.line) + ": unknown key '" + key +
                         "'");
    if (precondition) {
      record.nucleus_of = raw.require("nucleus-of");
      PrecondContext ctx;
      ctx.conditional = parse_flag_field(raw, "conditional");
      ctx.probability =
          parse_enum_field(raw, "probability", probability_from_token);
      ctx.changeable = parse_flag_field(raw, "changeable");
      ctx.logical_nature =
          parse_enum_field(raw, "logical-nature", logical_nature_from_token);
      ctx.thematic = parse_flag_field(raw, "thematic");
      ctx.obvious = parse_flag_field(raw, "obvious");
      ctx.actor = parse_enum_field(raw, "actor", actor_from_token);
      ctx.category = parse_enum_field(raw, "category", category_from_token);
      ctx.complexity =
          parse_enum_field(raw, "complexity", complexity_from_token);
      ctx.inception_witnessed = parse_flag_field(raw, "inception-witnessed");
      ctx.nominalized = parse_flag_field(raw, "nominalized");
      if (raw.get("repeated-mention")) {
        record.repeated_override = parse_flag_field(raw, "repeated-mention");
        ctx.repeated_mention = *record.repeated_override;
      }
      record.context = ctx;
    } else if (const std::string* token = raw.get("form")) {
      std::optional<Form> form = form_from_token(*token);
      if (!form)
        throw InputError("record '" + record.action_id + "': '" + *token +
                         "' is not a grammatical form");
      record.node_form = *form;
    }
    records.push_back(std::move(record));
  }
  return records;
}

DocumentPlan plan_document(const std::vector<SemanticRecord>& records,
                           const Lexicon& lexicon) {
  return plan_document(records, lexicon, precondition_network());
}

DocumentPlan plan_document(const std::vector<SemanticRecord>& records,
                           const Lexicon& lexicon, const SystemNetwork& net) {
  std::vector<const SemanticRecord*> mains;
  std::map<std::string, std::vector<const SemanticRecord*>> preconds;
  std::set<std::string> main_ids;
  for (const SemanticRecord& record : records) {
    if (record.nucleus_of) {
      preconds[*record.nucleus_of].push_back(&record);
    } else {
      if (!main_ids.insert(record.action_id).second)
        throw InputError("main action '" + record.action_id +
                         "' appears twice");
      mains.push_back(&record);
    }
  }
  for (const auto& [nucleus, group] : preconds)
    if (!main_ids.count(nucleus))
      throw InputError("precondition '" + group.front()->action_id +
                       "' names unknown nucleus '" + nucleus + "'");

  DocumentPlan plan;
  std::set<std::string> mentioned;
  for (const SemanticRecord* main : mains) {
    lexicon.require(main->action_id);
    DocumentPlan::Group group;
    group.nucleus_id = main->action_id;

    std::vector<TextNode> fronted, trailing;
    std::vector<Combining> fronted_combining, trailing_combining;
    int minted = 0;
    auto it = preconds.find(main->action_id);
    if (it != preconds.end()) {
      for (const SemanticRecord* record : it->second) {
        PrecondContext ctx = *record->context;
        ctx.repeated_mention = record->repeated_override
                                   ? *record->repeated_override
                                   : mentioned.count(record->action_id) > 0;
        const LexicalEntry& entry = lexicon.require(record->action_id);
        std::vector<std::string> violations = context_violations(ctx, entry);
        if (!violations.empty())
          throw InputError("record '" + record->action_id +
                           "': " + violations.front());
        TraversalTrace trace =
            traverse_precondition(net, ctx, entry, main->action_id);
        Decisions decisions = decisions_from_structure(trace.structure);

        TextNode node = *trace.structure.find(kPrecond);
        ++minted;
        node.role = Role{minted == 1 ? "Precond"
                                     : "Precond-" + std::to_string(minted)};
        if (decisions.slot == Slot::Fronted) {
          fronted.push_back(std::move(node));
          fronted_combining.push_back(decisions.combining);
        } else {
          trailing.push_back(std::move(node));
          trailing_combining.push_back(decisions.combining);
        }
        group.traces.push_back(std::move(trace));
        group.precond_ids.push_back(record->action_id);
      }
    }

    TextStructure ts;
    ts.nodes = fronted;
    TextNode nucleus{kNucleus, main->action_id};
    nucleus.form = main->node_form;
    ts.nodes.push_back(nucleus);
    ts.nodes.insert(ts.nodes.end(), trailing.begin(), trailing.end());
    for (Combining combining : fronted_combining)
      ts.boundaries.push_back(combining == Combining::Separate
                                  ? Boundary::SeparateSentence
                                  : Boundary::SameSentence);
    for (size_t j = 0; j < trailing.size(); ++j)
      ts.boundaries.push_back(!trailing[j].demoted &&
                                      trailing_combining[j] ==
                                          Combining::Separate
                                  ? Boundary::SeparateSentence
                                  : Boundary::SameSentence);
    group.structure = std::move(ts);

    plan.groups.push_back(std::move(group));
    mentioned.insert(main->action_id);
    for (const auto& id : plan.groups.back().precond_ids) mentioned.insert(id);
  }
  return plan;
}

}  // namespace sysnet
