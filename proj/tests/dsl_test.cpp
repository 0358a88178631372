#include <doctest.h>

#include <random>
#include <string>

#include "support/random_network.hpp"
#include "sysnet/dsl.hpp"
#include "sysnet/precond.hpp"

using namespace sysnet;

TEST_CASE("a headerless one-line system parses in fragment mode") {
  ParseResult result = parse_network(
      "system Condition-Probability { entry: Conditional-Action "
      "choice High-Probability { mark linker Precond \"when\" } "
      "choice Not-Probable { } }");
  REQUIRE(result.ok());
  const SystemNetwork& net = *result.network;
  CHECK(net.name.empty());
  // The unresolved entry reference became an implicitly declared input.
  CHECK(net.inputs == std::vector<std::string>{"Conditional-Action"});
  REQUIRE(net.units.size() == 1);
  const ChoicePoint& unit = net.units[0];
  CHECK(unit.kind == UnitKind::System);
  CHECK(unit.name == "Condition-Probability");
  CHECK(unit.entry == EntryCondition::ref("Conditional-Action"));
  REQUIRE(unit.choices.size() == 2);
  CHECK(unit.choices[0].feature == "High-Probability");
  REQUIRE(unit.choices[0].statements.size() == 1);
  CHECK(unit.choices[0].statements[0] ==
        mark_linker_stmt(kPrecond, "when"));
  CHECK(unit.choices[1].feature == "Not-Probable");
  CHECK(unit.choices[1].statements.empty());
}

TEST_CASE("fragment mode infers inputs in first-mention order") {
  ParseResult result = parse_network(
      "gate Later { entry: Second & First feature Done { } }");
  REQUIRE(result.ok());
  CHECK(result.network->inputs ==
        std::vector<std::string>{"Second", "First"});
}

TEST_CASE("a header makes unresolved references a semantic error") {
  ParseResult result = parse_network(
      "network Strict {\n"
      "  inputs: Go\n"
      "}\n"
      "\n"
      "system Broken {\n"
      "  entry: Missing\n"
      "  choice A { }\n"
      "  choice B { }\n"
      "}\n");
  REQUIRE(result.errors.size() == 1);
  CHECK_FALSE(result.network.has_value());
  const ParseError& error = result.errors[0];
  CHECK(error.line == 5);  // the offending unit's declaration line
  CHECK(error.message.find("dangling-reference") != std::string::npos);
  CHECK(error.message.find("'Missing'") != std::string::npos);
  CHECK(error.expected.empty());
  CHECK(to_string(error).rfind("5:1: dangling-reference", 0) == 0);
}

TEST_CASE("empty source parses to the empty network") {
  ParseResult result = parse_network("");
  REQUIRE(result.ok());
  CHECK(*result.network == SystemNetwork{});
  CHECK(serialize_network(*result.network).empty());
}

TEST_CASE("comments and blank lines are ignored") {
  ParseResult result = parse_network(
      "# a gate with a remark\n"
      "gate G { # inline remark\n"
      "  entry: *\n"
      "  feature F { insert Nucleus }\n"
      "}\n");
  REQUIRE(result.ok());
  CHECK(result.network->units.size() == 1);
  CHECK(result.network->units[0].entry == EntryCondition::truth());
}

TEST_CASE("a missing entry line defaults to the always-true condition") {
  ParseResult result = parse_network("gate G { feature F { } }");
  REQUIRE(result.ok());
  CHECK(result.network->units[0].entry == EntryCondition::truth());
}

TEST_CASE("entry expressions honour precedence and parentheses") {
  ParseResult result = parse_network(
      "gate G {\n"
      "  entry: A | B & !C & (D | E)\n"
      "  feature F { }\n"
      "}");
  REQUIRE(result.ok());
  using EC = EntryCondition;
  CHECK(result.network->units[0].entry ==
        EC::disjunction(
            {EC::ref("A"),
             EC::conjunction({EC::ref("B"), EC::negation(EC::ref("C")),
                              EC::disjunction({EC::ref("D"), EC::ref("E")})})}));
}

TEST_CASE("lexical errors carry positions") {
  SUBCASE("unterminated string") {
    ParseResult result = parse_network(
        "gate G {\n  feature F { mark linker Precond \"when }\n}");
    REQUIRE_FALSE(result.ok());
    CHECK(result.errors[0].message == "unterminated string literal");
    CHECK(result.errors[0].line == 2);
    CHECK(result.errors[0].column == 35);
  }

  SUBCASE("unexpected character") {
    ParseResult result = parse_network("gate G@ { feature F { } }");
    REQUIRE_FALSE(result.ok());
    CHECK(result.errors[0].message == "unexpected character '@'");
    CHECK(result.errors[0].line == 1);
    CHECK(result.errors[0].column == 7);
  }
}

TEST_CASE("parse errors name the expected token class") {
  ParseResult result = parse_network("system OneChoice { entry: }");
  REQUIRE_FALSE(result.ok());
  CHECK(result.errors[0].message == "malformed entry condition");
  CHECK(result.errors[0].expected == "feature name, '!', '(' or '*'");
}

TEST_CASE("recovery resumes at the next top-level block") {
  ParseResult result = parse_network(
      "system Broken { entry: }\n"
      "system Dolly { entry: }\n"
      "gate Fine { entry: * feature F { } }\n");
  CHECK(result.errors.size() == 2);  // one per broken block, Fine untouched
  CHECK(result.errors[0].line == 1);
  CHECK(result.errors[1].line == 2);
}

TEST_CASE("statement vocabulary is checked while parsing") {
  ParseResult bad_linker = parse_network(
      "gate G { feature F { mark linker Precond \"unless\" } }");
  REQUIRE_FALSE(bad_linker.ok());
  CHECK(bad_linker.errors[0].message.find("linker vocabulary") !=
        std::string::npos);

  ParseResult bad_form = parse_network(
      "gate G { feature F { mark form Precond PRESENT-PERFECT } }");
  REQUIRE_FALSE(bad_form.ok());
  CHECK(bad_form.errors[0].message.find("form vocabulary") !=
        std::string::npos);

  ParseResult bad_boundary = parse_network(
      "gate G { feature F { combine Precond Nucleus far-apart } }");
  REQUIRE_FALSE(bad_boundary.ok());
  CHECK(bad_boundary.errors[0].message.find("not a boundary") !=
        std::string::npos);
}

TEST_CASE("duplicate headers and entries are rejected") {
  ParseResult two_headers = parse_network(
      "network A { }\nnetwork B { }\ngate G { feature F { } }");
  REQUIRE_FALSE(two_headers.ok());
  CHECK(two_headers.errors[0].message == "duplicate network header");
  CHECK(two_headers.errors[0].line == 2);

  ParseResult two_entries = parse_network(
      "gate G { entry: A entry: B feature F { } }");
  REQUIRE_FALSE(two_entries.ok());
  CHECK(two_entries.errors[0].message == "duplicate entry condition");
}

TEST_CASE("validator findings surface as semantic errors") {
  // Gates declare exactly one feature; a strict header is not required.
  ParseResult result = parse_network(
      "gate Wide {\n"
      "  entry: *\n"
      "  feature A { }\n"
      "  feature B { }\n"
      "}");
  REQUIRE_FALSE(result.ok());
  CHECK(result.errors[0].line == 1);
  CHECK(result.errors[0].message.find("gate-feature-count") !=
        std::string::npos);
}

TEST_CASE("a one-gate network serializes to a single gate block") {
  SystemNetwork net;
  net.name = "Tiny";
  net.inputs = {"Go"};
  ChoicePoint unit;
  unit.kind = UnitKind::Gate;
  unit.name = "Start";
  unit.entry = EntryCondition::ref("Go");
  unit.choices.push_back(
      Choice{"Started", {insert_stmt(kNucleus), demote_stmt(kNucleus)}});
  net.units.push_back(unit);

  std::string text = serialize_network(net);
  CHECK(text ==
        "network Tiny {\n"
        "  inputs: Go\n"
        "}\n"
        "\n"
        "gate Start {\n"
        "  entry: Go\n"
        "  feature Started {\n"
        "    insert Nucleus\n"
        "    demote Nucleus\n"
        "  }\n"
        "}\n");

  ParseResult back = parse_network(text);
  REQUIRE(back.ok());
  CHECK(*back.network == net);
}

TEST_CASE("the shipped grammar round-trips through the serializer") {
  ParseResult first = parse_network(precondition_grammar_text());
  REQUIRE(first.ok());
  std::string canonical = serialize_network(*first.network);
  ParseResult second = parse_network(canonical);
  REQUIRE(second.ok());
  CHECK(*second.network == *first.network);
  CHECK(serialize_network(*second.network) == canonical);
}

TEST_CASE("random valid networks round-trip through the serializer") {
  std::mt19937 rng(20260815);
  for (int i = 0; i < 200; ++i) {
    SystemNetwork net = testing::random_network(rng);
    std::string text = serialize_network(net);
    ParseResult back = parse_network(text);
    REQUIRE_MESSAGE(back.ok(), "iteration ", i, ": ",
                    to_string(back.errors[0]), "\n", text);
    CHECK(*back.network == net);
  }
}
