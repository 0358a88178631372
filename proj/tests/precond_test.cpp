#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "support/context_space.hpp"
#include "sysnet/precond.hpp"

using namespace sysnet;

namespace {

LexicalEntry full_entry() {
  LexicalEntry entry;
  entry.action_id = "install-phone";
  entry.imperative_form = "install the phone";
  entry.present_active_clause = "the phone installs";
  entry.agentless_passive_clause = "the phone is installed";
  entry.relational_state_clause = "the phone is in place";
  entry.nominal_phrase = "the installation";
  entry.sensing_clause = "you see the phone installed";
  entry.alternate_clause = "elsewhere";
  return entry;
}

}  // namespace

TEST_CASE("semantic vocabulary tokens round-trip") {
  CHECK(probability_from_token(to_string(Probability::NotHigh)) ==
        Probability::NotHigh);
  CHECK(logical_nature_from_token("DISJUNCTIVE") ==
        LogicalNature::Disjunctive);
  CHECK(actor_from_token("NON-READER") == ActorType::NonReader);
  CHECK(category_from_token("HABITUAL-DECISION") ==
        ActionCategory::HabitualDecision);
  CHECK(complexity_from_token("LONG-OR-COMPLEX") ==
        ClauseComplexity::LongOrComplex);
  CHECK(slot_from_token("AFTER-NUCLEUS") == Slot::AfterNucleus);
  CHECK(combining_from_token("SEPARATE") == Combining::Separate);
  CHECK_FALSE(probability_from_token("MAYBE").has_value());
  CHECK(to_string(ActionCategory::Monitor) == "MONITOR");
}

TEST_CASE("lexicon records parse with derived availability") {
  Lexicon lexicon = parse_lexicon(
      "# switch actions\n"
      "action: install-phone\n"
      "imperative: install the phone\n"
      "agentless-passive: the phone is installed\n"
      "active-available: false\n"
      "\n"
      "action: battery-low\n"
      "relational-state: the battery in the handset is low\n"
      "relational-available: true\n");
  const LexicalEntry& install = lexicon.require("install-phone");
  CHECK(install.imperative_form == "install the phone");
  CHECK_FALSE(install.active_available());
  CHECK_FALSE(install.relational_available());
  CHECK(lexicon.require("battery-low").relational_available());
  CHECK(lexicon.find("missing") == nullptr);
  CHECK_THROWS_AS(lexicon.require("missing"), InputError);
}

TEST_CASE("lexicon schema violations raise InputError") {
  CHECK_THROWS_AS(parse_lexicon("action: a\nmood: imperative\n"), InputError);
  CHECK_THROWS_AS(parse_lexicon("imperative: do it\n"), InputError);
  CHECK_THROWS_AS(
      parse_lexicon("action: a\n\naction: a\nimperative: again\n"),
      InputError);
  // A declared availability flag must agree with the clause fields.
  CHECK_THROWS_AS(
      parse_lexicon("action: a\nactive-available: true\n"), InputError);
  CHECK_THROWS_AS(
      parse_lexicon("action: a\npresent-active: it runs\n"
                    "active-available: no\n"),
      InputError);
}

TEST_CASE("context invariants are enforced") {
  LexicalEntry entry = full_entry();
  PrecondContext ctx;
  CHECK(context_violations(ctx, entry).empty());

  SUBCASE("a precondition must be conditional") {
    ctx.conditional = false;
    CHECK_FALSE(context_violations(ctx, entry).empty());
  }

  SUBCASE("nominalization needs an obvious non-reader action with a noun") {
    ctx.nominalized = true;
    ctx.obvious = true;
    ctx.actor = ActorType::NonReader;
    CHECK(context_violations(ctx, entry).empty());

    PrecondContext bad = ctx;
    bad.obvious = false;
    CHECK_FALSE(context_violations(bad, entry).empty());

    bad = ctx;
    bad.actor = ActorType::Reader;
    CHECK_FALSE(context_violations(bad, entry).empty());

    bad = ctx;
    bad.category = ActionCategory::Monitor;
    CHECK_FALSE(context_violations(bad, entry).empty());

    LexicalEntry no_noun = entry;
    no_noun.nominal_phrase.reset();
    CHECK_FALSE(context_violations(ctx, no_noun).empty());
  }

  SUBCASE("changeable conditions stay simple and unthemed") {
    ctx.changeable = true;
    CHECK(context_violations(ctx, entry).empty());
    ctx.logical_nature = LogicalNature::Exclusive;
    CHECK_FALSE(context_violations(ctx, entry).empty());
    ctx.logical_nature = LogicalNature::Simple;
    ctx.thematic = true;
    CHECK_FALSE(context_violations(ctx, entry).empty());
  }
}

TEST_CASE("slot: marked contexts trail the nucleus") {
  PrecondContext ctx;
  CHECK(decide_slot(ctx) == Slot::Fronted);
  ctx.thematic = true;
  CHECK(decide_slot(ctx) == Slot::AfterNucleus);
  ctx.thematic = false;
  ctx.logical_nature = LogicalNature::Exclusive;
  CHECK(decide_slot(ctx) == Slot::AfterNucleus);
  ctx.logical_nature = LogicalNature::Disjunctive;
  CHECK(decide_slot(ctx) == Slot::AfterNucleus);
  ctx.logical_nature = LogicalNature::Simple;
  ctx.nominalized = true;
  CHECK(decide_slot(ctx) == Slot::AfterNucleus);
}

TEST_CASE("linker: probability picks when/if, nature refines") {
  PrecondContext ctx;
  CHECK(decide_linker(ctx) == Linker::When);  // high probability
  ctx.nominalized = true;
  CHECK(decide_linker(ctx) == Linker::After);
  ctx.nominalized = false;
  ctx.probability = Probability::NotHigh;
  CHECK(decide_linker(ctx) == Linker::If);
  ctx.logical_nature = LogicalNature::Exclusive;
  CHECK(decide_linker(ctx) == Linker::OnlyIf);
  ctx.logical_nature = LogicalNature::Disjunctive;
  CHECK(decide_linker(ctx) == Linker::WhetherOr);
  ctx.changeable = false;
  ctx.category = ActionCategory::Monitor;
  CHECK(decide_linker(ctx) == Linker::None);
  ctx.category = ActionCategory::Other;
  ctx.changeable = true;
  CHECK(decide_linker(ctx) == Linker::None);
}

TEST_CASE("form: category, actor, and availability drive the clause shape") {
  LexicalEntry entry = full_entry();
  PrecondContext ctx;

  ctx.changeable = true;
  CHECK(decide_form(ctx, entry) == Form::MakeSureImperative);
  ctx.changeable = false;

  ctx.category = ActionCategory::Monitor;
  CHECK(decide_form(ctx, entry) == Form::MonitorImperative);
  ctx.category = ActionCategory::Giving;
  CHECK(decide_form(ctx, entry) == Form::RelationalState);
  ctx.category = ActionCategory::Placing;
  CHECK(decide_form(ctx, entry) == Form::RelationalState);
  ctx.category = ActionCategory::HabitualDecision;
  CHECK(decide_form(ctx, entry) == Form::PresentActive);
  ctx.category = ActionCategory::Other;

  // Reader actions hinge on earlier mention.
  ctx.actor = ActorType::Reader;
  CHECK(decide_form(ctx, entry) == Form::PresentActive);
  ctx.repeated_mention = true;
  CHECK(decide_form(ctx, entry) == Form::PresentAgentlessPassive);

  // Non-reader actions prefer active, then sensing, then relational.
  ctx.actor = ActorType::NonReader;
  ctx.repeated_mention = false;
  CHECK(decide_form(ctx, entry) == Form::PresentActive);

  LexicalEntry no_active = entry;
  no_active.present_active_clause.reset();
  ctx.inception_witnessed = true;
  CHECK(decide_form(ctx, no_active) == Form::SensingPresent);
  ctx.inception_witnessed = false;
  CHECK(decide_form(ctx, no_active) == Form::RelationalState);

  LexicalEntry passive_only = no_active;
  passive_only.relational_state_clause.reset();
  CHECK(decide_form(ctx, passive_only) == Form::PresentAgentlessPassive);

  // Long or complex clauses hide the action even when active exists.
  ctx.complexity = ClauseComplexity::LongOrComplex;
  CHECK(decide_form(ctx, entry) == Form::RelationalState);

  // Obvious nominalizable actions become nominal phrases.
  PrecondContext nominal;
  nominal.obvious = true;
  nominal.actor = ActorType::NonReader;
  nominal.nominalized = true;
  CHECK(decide_form(nominal, entry) == Form::NominalPhrase);
}

TEST_CASE("combining: changeable and monitor conditions stand alone") {
  PrecondContext ctx;
  CHECK(decide_combining(ctx) == Combining::Combined);
  ctx.changeable = true;
  CHECK(decide_combining(ctx) == Combining::Separate);
  ctx.changeable = false;
  ctx.category = ActionCategory::Monitor;
  CHECK(decide_combining(ctx) == Combining::Separate);
}

TEST_CASE("decide_all validates, decides, and renders") {
  LexicalEntry entry = full_entry();
  PrecondContext ctx;
  ctx.actor = ActorType::NonReader;
  Decisions decisions = decide_all(ctx, entry);
  CHECK(decisions == Decisions{Slot::Fronted, Linker::When,
                               Form::PresentActive, Combining::Combined});
  CHECK(to_string(decisions) ==
        "slot=FRONTED linker=\"when\" form=PRESENT-ACTIVE combining=COMBINED");

  PrecondContext invalid;
  invalid.conditional = false;
  CHECK_THROWS_AS(decide_all(invalid, entry), InputError);
}

TEST_CASE("the shipped grammar is structurally clean") {
  const SystemNetwork& net = precondition_network();
  CHECK(net.name == "Precondition-Expression");
  CHECK(net.inputs ==
        std::vector<std::string>{"Conditional-Action", "Nominalized",
                                 "Repeated-Mention", "Exclusive-Condition",
                                 "Disjunctive-Condition"});
  CHECK(net.units.size() == 18);

  ValidationReport report = validate_network(net);
  CHECK(report.ok());
  CHECK(report.issues.empty());  // warnings included

  for (const char* name :
       {"Condition-Probability", "Complexity", "Precond-When",
        "Precond-Nominal", "Changeable-Type", "Act-Hide", "Active-Available",
        "Inception-Status", "Termination-Availability", "Repeated-Reader",
        "Not-Repeated-Reader"}) {
    CAPTURE(name);
    CHECK(net.find_unit(name) != nullptr);
  }
  CHECK(net.find_unit("Precond-When")->kind == UnitKind::Gate);
  CHECK(net.find_unit("Complexity")->kind == UnitKind::System);

  // Every system has a registered choice function.
  const ChoiceTable& table = precondition_choices();
  for (const auto& unit : net.units)
    if (unit.kind == UnitKind::System) CHECK(table.count(unit.name) == 1);
}

TEST_CASE("encode_context speaks the grammar's feature language") {
  PrecondContext ctx;
  ctx.logical_nature = LogicalNature::Exclusive;
  ctx.probability = Probability::NotHigh;
  FeatureContext fc = encode_context(ctx, full_entry(), "move-switch");
  CHECK(fc.assignments.at("Conditional-Action") == "true");
  CHECK(fc.assignments.at("Exclusive-Condition") == "true");
  CHECK(fc.assignments.at("Disjunctive-Condition") == "false");
  CHECK(fc.assignments.at("probability") == "NOT-HIGH");
  CHECK(fc.assignments.at("active-available") == "true");
  CHECK(fc.role_actions.at("Precond") == "install-phone");
  CHECK(fc.role_actions.at("Nucleus") == "move-switch");
}

TEST_CASE("the only linker overwrite is the when-to-after refinement") {
  for (const testing::SpacePoint& point : testing::enumerate_valid_space()) {
    TraversalTrace trace =
        traverse_precondition(point.ctx, point.entry, "nucleus");
    for (const MarkOverwrite& ow : trace.overwrites) {
      CHECK(ow.unit == "Precond-Nominal");
      CHECK(ow.role == "Precond");
      CHECK(ow.attribute == "linker");
      CHECK(ow.old_value == "when");
      CHECK(ow.new_value == "after");
    }
  }
}

TEST_CASE("decisions can be read back from a pair structure") {
  TextStructure ts;
  ts = insert_node(ts, kNucleus, "n");
  CHECK_THROWS_AS(decisions_from_structure(ts), StructureError);

  ts = insert_node(ts, kPrecond, "p");
  CHECK_THROWS_AS(decisions_from_structure(ts), StructureError);  // no form

  ts = mark_node(ts, kPrecond, MarkAttribute::Form, "RELATIONAL-STATE");
  ts = mark_node(ts, kPrecond, MarkAttribute::Linker, "only if");
  Decisions decisions = decisions_from_structure(ts);
  CHECK(decisions == Decisions{Slot::AfterNucleus, Linker::OnlyIf,
                               Form::RelationalState, Combining::Combined});

  ts = set_boundary(ts, kNucleus, kPrecond, Boundary::SeparateSentence);
  CHECK(decisions_from_structure(ts).combining == Combining::Separate);

  TextStructure split = insert_node(ts, Role{"Wedge"}, "w");
  split = order_nodes(split, Role{"Wedge"}, kPrecond);
  CHECK_THROWS_AS(decisions_from_structure(split), StructureError);
}

TEST_CASE("semantic documents parse into main and precondition records") {
  std::vector<SemanticRecord> records = parse_semantic(
      "action: move-switch\n"
      "form: IMPERATIVE\n"
      "\n"
      "action: install-phone\n"
      "nucleus-of: move-switch\n"
      "conditional: true\n"
      "probability: HIGH\n"
      "changeable: false\n"
      "logical-nature: SIMPLE\n"
      "thematic: false\n"
      "obvious: false\n"
      "actor: READER\n"
      "category: OTHER\n"
      "repeated-mention: true\n"
      "complexity: NORMAL\n"
      "inception-witnessed: false\n"
      "nominalized: false\n");
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].nucleus_of.has_value());
  CHECK(records[0].node_form == Form::Imperative);
  REQUIRE(records[1].nucleus_of.has_value());
  CHECK(*records[1].nucleus_of == "move-switch");
  REQUIRE(records[1].context.has_value());
  CHECK(records[1].context->actor == ActorType::Reader);
  CHECK(records[1].repeated_override == true);
}

TEST_CASE("semantic schema violations raise InputError") {
  CHECK_THROWS_AS(parse_semantic("action: a\ncolour: blue\n"), InputError);
  CHECK_THROWS_AS(parse_semantic("action: a\nform: PRESENT-PERFECT\n"),
                  InputError);
  CHECK_THROWS_AS(  // a precondition record missing its context fields
      parse_semantic("action: a\nnucleus-of: b\n"), InputError);
  CHECK_THROWS_AS(  // bad enum token
      parse_semantic("action: a\nnucleus-of: b\nconditional: true\n"
                     "probability: MAYBE\nchangeable: false\n"
                     "logical-nature: SIMPLE\nthematic: false\n"
                     "obvious: false\nactor: READER\ncategory: OTHER\n"
                     "complexity: NORMAL\ninception-witnessed: false\n"
                     "nominalized: false\n"),
      InputError);
}

TEST_CASE("document planning threads repeated mention through the text") {
  Lexicon lexicon = parse_lexicon(
      "action: boil-water\n"
      "imperative: boil the water\n"
      "present-active: the water boils\n"
      "agentless-passive: the water is boiled\n"
      "\n"
      "action: add-pasta\n"
      "imperative: add the pasta\n");
  std::string precond_fields =
      "conditional: true\n"
      "probability: HIGH\n"
      "changeable: false\n"
      "logical-nature: SIMPLE\n"
      "thematic: false\n"
      "obvious: false\n"
      "actor: READER\n"
      "category: OTHER\n"
      "complexity: NORMAL\n"
      "inception-witnessed: false\n"
      "nominalized: false\n";

  SUBCASE("an action detailed in an earlier step is repeated") {
    std::vector<SemanticRecord> records = parse_semantic(
        "action: boil-water\nform: IMPERATIVE\n\n"
        "action: add-pasta\n\n"
        "action: boil-water\nnucleus-of: add-pasta\n" + precond_fields);
    DocumentPlan plan = plan_document(records, lexicon);
    REQUIRE(plan.groups.size() == 2);
    CHECK(plan.groups[0].structure.nodes.size() == 1);

    const DocumentPlan::Group& step = plan.groups[1];
    CHECK(step.precond_ids == std::vector<std::string>{"boil-water"});
    REQUIRE(step.structure.nodes.size() == 2);
    CHECK(step.structure.nodes[0].role == kPrecond);
    CHECK(step.structure.nodes[0].form == Form::PresentAgentlessPassive);
    CHECK(step.structure.nodes[0].linker == Linker::When);
    CHECK(step.structure.nodes[1].role == kNucleus);
    CHECK(step.structure.nodes[1].form == Form::Imperative);
    CHECK(step.structure.boundaries[0] == Boundary::SameSentence);
  }

  SUBCASE("an explicit override beats the discourse record") {
    std::vector<SemanticRecord> records = parse_semantic(
        "action: boil-water\nform: IMPERATIVE\n\n"
        "action: add-pasta\n\n"
        "action: boil-water\nnucleus-of: add-pasta\n" + precond_fields +
        "repeated-mention: false\n");
    DocumentPlan plan = plan_document(records, lexicon);
    CHECK(plan.groups[1].structure.nodes[0].form == Form::PresentActive);
  }

  SUBCASE("a fresh mention stays active") {
    std::vector<SemanticRecord> records = parse_semantic(
        "action: add-pasta\n\n"
        "action: boil-water\nnucleus-of: add-pasta\n" + precond_fields);
    DocumentPlan plan = plan_document(records, lexicon);
    CHECK(plan.groups[0].structure.nodes[0].form == Form::PresentActive);
  }
}

TEST_CASE("document planning rejects inconsistent inputs") {
  Lexicon lexicon = parse_lexicon(
      "action: a\nimperative: do a\n\naction: b\nimperative: do b\n");
  std::vector<SemanticRecord> twice =
      parse_semantic("action: a\n\naction: a\n");
  CHECK_THROWS_AS(plan_document(twice, lexicon), InputError);

  std::vector<SemanticRecord> orphan = parse_semantic(
      "action: a\n\n"
      "action: b\nnucleus-of: ghost\nconditional: true\nprobability: HIGH\n"
      "changeable: false\nlogical-nature: SIMPLE\nthematic: false\n"
      "obvious: false\nactor: READER\ncategory: OTHER\ncomplexity: NORMAL\n"
      "inception-witnessed: false\nnominalized: false\n");
  CHECK_THROWS_AS(plan_document(orphan, lexicon), InputError);
}
