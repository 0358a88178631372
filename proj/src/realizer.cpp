#include "sysnet/realizer.hpp"

#include <cctype>
#include <sstream>

#include "sysnet/errors.hpp"

namespace sysnet {

namespace {

const std::string& clause_variant(const LexicalEntry& entry, Form form) {
  const std::optional<std::string>* field = nullptr;
  const char* what = "";
  switch (form) {
    case Form::Imperative:
    case Form::MonitorImperative:
      field = &entry.imperative_form;
      what = "imperative";
      break;
    case Form::PresentActive:
      field = &entry.present_active_clause;
      what = "present-active";
      break;
    case Form::PresentAgentlessPassive:
      field = &entry.agentless_passive_clause;
      what = "agentless-passive";
      break;
    case Form::RelationalState:
      field = &entry.relational_state_clause;
      what = "relational-state";
      break;
    case Form::SensingPresent:
      field = &entry.sensing_clause;
      what = "sensing";
      break;
    case Form::NominalPhrase:
      field = &entry.nominal_phrase;
      what = "nominal-phrase";
      break;
    case Form::MakeSureImperative:
      break;  // handled by the caller
  }
  if (!field || !field->has_value())
    throw InputError("action '" + entry.action_id + "' has no " + what +
                     " variant required by form " + to_string(form));
  return **field;
}

}  // namespace

std::string realize_clause(const TextNode& node, const Lexicon& lexicon,
                           bool suppress_linker) {
  const LexicalEntry& entry = lexicon.require(node.action_id);
  Form form = node.form.value_or(Form::Imperative);

  std::string base;
  if (form == Form::MakeSureImperative) {
    const std::optional<std::string>& state =
        entry.relational_state_clause ? entry.relational_state_clause
                                      : entry.present_active_clause;
    if (!state)
      throw InputError("action '" + entry.action_id +
                       "' has no relational-state or present-active variant "
                       "required by form " +
                       to_string(form));
    base = "make sure " + *state;
  } else {
    base = clause_variant(entry, form);
  }

  if (suppress_linker || node.linker == Linker::None) return base;
  if (node.linker == Linker::WhetherOr) {
    if (!entry.alternate_clause)
      throw InputError("action '" + entry.action_id +
                       "' has no alternate-clause variant required by linker "
                       "\"whether ... or ...\"");
    return "whether " + base + " or " + *entry.alternate_clause;
  }
  return to_string(node.linker) + " " + base;
}

RealizedText realize_text(const TextStructure& ts, const Lexicon& lexicon) {
  RealizedText out;
  std::string current;
  auto finish = [&] {
    if (current.empty()) return;
    current[0] =
        static_cast<char>(std::toupper(static_cast<unsigned char>(current[0])));
    current += ".";
    out.sentences.push_back(std::move(current));
    current.clear();
  };

  for (size_t i = 0; i < ts.nodes.size(); ++i) {
    const TextNode& node = ts.nodes[i];
    std::string joiner;
    bool suppress_linker = false;
    if (i > 0) {
      if (ts.boundaries[i - 1] == Boundary::SeparateSentence) {
        finish();
      } else {
        const TextNode& prev = ts.nodes[i - 1];
        if (node.demoted) {
          joiner = " ";
        } else if (!prev.role.is_nucleus() && !node.role.is_nucleus() &&
                   !prev.demoted) {
          joiner = ", and ";
          suppress_linker = true;
        } else if (!prev.role.is_nucleus() && !prev.demoted) {
          joiner = ", ";
        } else {
          joiner = " ";
        }
      }
    }
    std::string clause = realize_clause(node, lexicon, suppress_linker);
    if (current.empty())
      current = std::move(clause);
    else
      current += joiner + clause;
  }
  finish();

  for (size_t i = 0; i < out.sentences.size(); ++i) {
    if (i) out.joined += " ";
    out.joined += out.sentences[i];
  }
  return out;
}

std::vector<RealizedText> realize_document(const DocumentPlan& plan,
                                           const Lexicon& lexicon) {
  std::vector<RealizedText> steps;
  steps.reserve(plan.groups.size());
  for (const auto& group : plan.groups)
    steps.push_back(realize_text(group.structure, lexicon));
  return steps;
}

std::string joined_document(const std::vector<RealizedText>& steps) {
  std::string out;
  for (const auto& step : steps) {
    if (step.joined.empty()) continue;
    if (!out.empty()) out += " ";
    out += step.joined;
  }
  return out;
}

std::string number_steps(const std::vector<RealizedText>& steps) {
  std::ostringstream os;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) os << "\n";
    os << (i + 1) << ". " << steps[i].joined;
  }
  return os.str();
}

}  // namespace sysnet
