#include "sysnet/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sysnet/errors.hpp"
#include "sysnet/realizer.hpp"
#include "sysnet/records.hpp"

namespace sysnet {

namespace {

const std::set<std::string> kDimensions = {"slot", "linker", "form",
                                           "combining"};

const std::set<std::string> kFixtureKeys = {
    "id",          "source",        "precond",        "nucleus",
    "nucleus-form", "conditional",  "probability",    "changeable",
    "logical-nature", "thematic",   "obvious",        "actor",
    "category",    "repeated-mention", "complexity",  "inception-witnessed",
    "nominalized", "expect-slot",   "expect-linker",  "expect-form",
    "expect-combining", "corpus-slot", "corpus-linker", "corpus-form",
    "corpus-combining", "known-mismatch", "expect-text"};

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool flag_field(const KeyValueRecord& record, const std::string& key) {
  std::optional<bool> value = bool_from_token(record.require(key));
  if (!value)
    throw InputError("fixture key " + key + " must be true or false");
  return *value;
}

template <typename Enum>
Enum enum_field(const KeyValueRecord& record, const std::string& key,
                std::optional<Enum> (*from_token)(const std::string&)) {
  const std::string& token = record.require(key);
  std::optional<Enum> value = from_token(token);
  if (!value)
    throw InputError("fixture key " + key + ": '" + token +
                     "' is not in the vocabulary");
  return *value;
}

Linker linker_field(const KeyValueRecord& record, const std::string& key) {
  const std::string& token = record.require(key);
  if (token == "none") return Linker::None;
  std::optional<Linker> value = linker_from_token(token);
  if (!value || *value == Linker::None)
    throw InputError("fixture key " + key + ": '" + token +
                     "' is not a linker token (use 'none' for no linker)");
  return *value;
}

std::string linker_token(Linker linker) {
  return linker == Linker::None ? std::string("none") : to_string(linker);
}

std::string percent(int matched, int total) {
  char buffer[32];
  double value = total == 0 ? 0.0 : 100.0 * matched / total;
  std::snprintf(buffer, sizeof buffer, "%.1f", value);
  return buffer;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  std::istringstream in(text);
  std::string line, head, tail;
  bool in_lexicon = false;
  while (std::getline(in, line)) {
    if (!in_lexicon && trim(line) == "lexicon:") {
      in_lexicon = true;
      continue;
    }
    (in_lexicon ? tail : head) += line + "\n";
  }
  if (!in_lexicon) throw InputError("fixture lacks a 'lexicon:' section");

  KeyValueRecord merged;
  for (const KeyValueRecord& record : parse_records(head)) {
    if (merged.fields.empty()) merged.line = record.line;
    for (const auto& [key, value] : record.fields) {
      if (merged.get(key))
        throw InputError("fixture key '" + key + "' appears twice");
      merged.fields.emplace_back(key, value);
    }
  }
  for (const auto& [key, value] : merged.fields)
    if (!kFixtureKeys.count(key))
      throw InputError("unknown fixture key '" + key + "'");

  Fixture fixture;
  fixture.id = merged.require("id");
  if (const std::string* source = merged.get("source"))
    fixture.source = *source;
  fixture.precond_action = merged.require("precond");
  fixture.nucleus_action = merged.require("nucleus");
  if (const std::string* token = merged.get("nucleus-form")) {
    std::optional<Form> form = form_from_token(*token);
    if (!form)
      throw InputError("nucleus-form: '" + *token +
                       "' is not a grammatical form");
    fixture.nucleus_form = *form;
  }

  PrecondContext& ctx = fixture.context;
  ctx.conditional = flag_field(merged, "conditional");
  ctx.probability = enum_field(merged, "probability", probability_from_token);
  ctx.changeable = flag_field(merged, "changeable");
  ctx.logical_nature =
      enum_field(merged, "logical-nature", logical_nature_from_token);
  ctx.thematic = flag_field(merged, "thematic");
  ctx.obvious = flag_field(merged, "obvious");
  ctx.actor = enum_field(merged, "actor", actor_from_token);
  ctx.category = enum_field(merged, "category", category_from_token);
  ctx.repeated_mention = flag_field(merged, "repeated-mention");
  ctx.complexity = enum_field(merged, "complexity", complexity_from_token);
  ctx.inception_witnessed = flag_field(merged, "inception-witnessed");
  ctx.nominalized = flag_field(merged, "nominalized");

  fixture.expected.slot = enum_field(merged, "expect-slot", slot_from_token);
  fixture.expected.linker = linker_field(merged, "expect-linker");
  fixture.expected.form = enum_field(merged, "expect-form", form_from_token);
  fixture.expected.combining =
      enum_field(merged, "expect-combining", combining_from_token);

  for (const char* dimension : {"slot", "linker", "form", "combining"}) {
    const std::string* value = merged.get("corpus-" + std::string(dimension));
    if (value) fixture.corpus_overrides[dimension] = *value;
  }
  if (const std::string* list = merged.get("known-mismatch")) {
    std::istringstream tokens(*list);
    std::string token;
    while (tokens >> token) {
      if (!kDimensions.count(token))
        throw InputError("known-mismatch names unknown dimension '" + token +
                         "'");
      fixture.known_mismatches.insert(token);
    }
  }
  if (const std::string* expected = merged.get("expect-text"))
    fixture.expected_text = *expected;

  fixture.lexicon = parse_lexicon(tail);
  fixture.lexicon.require(fixture.precond_action);
  fixture.lexicon.require(fixture.nucleus_action);
  return fixture;
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw InputError("'" + dir + "' is not a directory");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".fix") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> fixtures;
  for (const auto& path : paths) {
    try {
      fixtures.push_back(parse_fixture(read_file(path)));
    } catch (const Error& error) {
      throw InputError(path.string() + ": " + error.what());
    }
  }
  if (fixtures.empty())
    throw InputError("no *.fix fixtures in '" + dir + "'");
  return fixtures;
}

FixtureResult run_fixture(const Fixture& fixture) {
  FixtureResult result;
  result.id = fixture.id;
  try {
    const LexicalEntry& entry =
        fixture.lexicon.require(fixture.precond_action);
    Decisions decisions = decide_all(fixture.context, entry);

    auto add = [&](const std::string& dimension, std::string predicted,
                   std::string frozen) {
      DimensionResult dr;
      dr.dimension = dimension;
      dr.predicted = std::move(predicted);
      dr.expected = std::move(frozen);
      auto it = fixture.corpus_overrides.find(dimension);
      dr.corpus = it == fixture.corpus_overrides.end() ? dr.expected
                                                       : it->second;
      dr.regression_match = dr.predicted == dr.expected;
      dr.corpus_match = dr.predicted == dr.corpus;
      dr.whitelisted = fixture.known_mismatches.count(dimension) > 0;
      result.dimensions.push_back(std::move(dr));
    };
    add("slot", to_string(decisions.slot), to_string(fixture.expected.slot));
    add("linker", linker_token(decisions.linker),
        linker_token(fixture.expected.linker));
    add("form", to_string(decisions.form), to_string(fixture.expected.form));
    add("combining", to_string(decisions.combining),
        to_string(fixture.expected.combining));

    if (fixture.expected_text) {
      TraversalTrace trace = traverse_precondition(fixture.context, entry,
                                                   fixture.nucleus_action);
      TextStructure ts =
          mark_node(trace.structure, kNucleus, MarkAttribute::Form,
                    to_string(fixture.nucleus_form));
      DimensionResult dr;
      dr.dimension = "text";
      dr.predicted = realize_text(ts, fixture.lexicon).joined;
      dr.expected = *fixture.expected_text;
      dr.corpus = *fixture.expected_text;
      dr.regression_match = dr.predicted == dr.expected;
      dr.corpus_match = dr.regression_match;
      result.dimensions.push_back(std::move(dr));
    }

    for (const auto& dr : result.dimensions)
      if (!dr.regression_match) result.hard_fail = true;
  } catch (const std::exception& error) {
    result.hard_fail = true;
    result.failure = error.what();
  }
  return result;
}

Evaluation evaluate(const std::vector<Fixture>& fixtures) {
  if (fixtures.empty()) throw InputError("no fixtures to evaluate");
  std::set<std::string> ids;
  for (const Fixture& fixture : fixtures) {
    if (fixture.id.empty()) throw InputError("fixture with empty id");
    if (!ids.insert(fixture.id).second)
      throw InputError("duplicate fixture id '" + fixture.id + "'");
  }
  Evaluation evaluation;
  for (const Fixture& fixture : fixtures)
    evaluation.fixtures.push_back(run_fixture(fixture));
  std::sort(evaluation.fixtures.begin(), evaluation.fixtures.end(),
            [](const FixtureResult& a, const FixtureResult& b) {
              return a.id < b.id;
            });
  return evaluation;
}

bool Evaluation::pass() const {
  for (const auto& fixture : fixtures) {
    if (fixture.hard_fail) return false;
    for (const auto& dr : fixture.dimensions)
      if (!dr.corpus_match && !dr.whitelisted) return false;
  }
  return true;
}

std::string machine_report(const Evaluation& evaluation) {
  std::ostringstream os;
  for (const auto& fixture : evaluation.fixtures) {
    if (!fixture.failure.empty()) {
      os << "fixture: " << fixture.id << "\n";
      os << "error: " << fixture.failure << "\n\n";
      continue;
    }
    for (const auto& dr : fixture.dimensions) {
      os << "fixture: " << fixture.id << "\n";
      os << "dimension: " << dr.dimension << "\n";
      os << "predicted: " << dr.predicted << "\n";
      os << "expected: " << dr.expected << "\n";
      if (dr.corpus != dr.expected) os << "corpus: " << dr.corpus << "\n";
      os << "match: "
         << (dr.corpus_match ? "yes"
                             : dr.whitelisted ? "known-mismatch" : "no")
         << "\n\n";
    }
  }
  std::vector<std::string> order = {"slot", "linker", "form", "combining",
                                    "text"};
  for (const auto& dimension : order) {
    int matched = 0, total = 0;
    for (const auto& fixture : evaluation.fixtures)
      for (const auto& dr : fixture.dimensions)
        if (dr.dimension == dimension) {
          ++total;
          if (dr.corpus_match) ++matched;
        }
    if (total == 0) continue;
    os << "summary: " << dimension << "\n";
    os << "matched: " << matched << "\n";
    os << "total: " << total << "\n";
    os << "percent: " << percent(matched, total) << "\n\n";
  }
  os << "result: " << (evaluation.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string human_report(const Evaluation& evaluation) {
  int width = 12;
  if (const char* env = std::getenv("SYSNET_WIDTH")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0') width = static_cast<int>(parsed);
  }
  width = std::clamp(width, 8, 64);

  std::ostringstream os;
  for (const auto& fixture : evaluation.fixtures) {
    std::string id = fixture.id;
    if (static_cast<int>(id.size()) < width)
      id.resize(static_cast<size_t>(width), ' ');
    os << id;
    if (!fixture.failure.empty()) {
      os << " ERROR " << fixture.failure << "\n";
      continue;
    }
    for (const auto& dr : fixture.dimensions) {
      const char* status = "ok";
      if (!dr.regression_match)
        status = "REGRESSION";
      else if (!dr.corpus_match)
        status = dr.whitelisted ? "known-mismatch" : "MISMATCH";
      os << " " << dr.dimension << "=" << status;
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& dimension : {"slot", "linker", "form", "combining"}) {
    int matched = 0, total = 0;
    for (const auto& fixture : evaluation.fixtures)
      for (const auto& dr : fixture.dimensions)
        if (dr.dimension == dimension) {
          ++total;
          if (dr.corpus_match) ++matched;
        }
    os << dimension << ": " << matched << "/" << total << "  ";
  }
  os << "\n" << "result: " << (evaluation.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace sysnet
