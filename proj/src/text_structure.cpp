#include "sysnet/text_structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace sysnet {

namespace {

const std::pair<Form, const char*> kFormTokens[] = {
    {Form::Imperative, "IMPERATIVE"},
    {Form::MonitorImperative, "MONITOR-IMPERATIVE"},
    {Form::MakeSureImperative, "MAKE-SURE-IMPERATIVE"},
    {Form::PresentActive, "PRESENT-ACTIVE"},
    {Form::PresentAgentlessPassive, "PRESENT-AGENTLESS-PASSIVE"},
    {Form::RelationalState, "RELATIONAL-STATE"},
    {Form::SensingPresent, "SENSING-PRESENT"},
    {Form::NominalPhrase, "NOMINAL-PHRASE"},
};

const std::pair<Linker, const char*> kLinkerTokens[] = {
    {Linker::None, ""},
    {Linker::When, "when"},
    {Linker::If, "if"},
    {Linker::OnlyIf, "only if"},
    {Linker::WhetherOr, "whether ... or ..."},
    {Linker::After, "after"},
};

}  // namespace

std::string to_string(Form form) {
  for (const auto& [f, tok] : kFormTokens)
    if (f == form) return tok;
  return "?";
}

std::string to_string(Linker linker) {
  for (const auto& [l, tok] : kLinkerTokens)
    if (l == linker) return tok;
  return "?";
}

std::string to_string(Boundary boundary) {
  return boundary == Boundary::SameSentence ? "same-sentence"
                                            : "separate-sentence";
}

std::string to_string(MarkAttribute attribute) {
  return attribute == MarkAttribute::Linker ? "linker" : "form";
}

std::optional<Form> form_from_token(const std::string& token) {
  for (const auto& [f, tok] : kFormTokens)
    if (token == tok) return f;
  return std::nullopt;
}

std::optional<Linker> linker_from_token(const std::string& token) {
  for (const auto& [l, tok] : kLinkerTokens)
    if (token == tok) return l;
  return std::nullopt;
}

std::optional<Boundary> boundary_from_token(const std::string& token) {
  if (token == "same-sentence") return Boundary::SameSentence;
  if (token == "separate-sentence") return Boundary::SeparateSentence;
  return std::nullopt;
}

const TextNode* TextStructure::find(const Role& role) const {
  for (const auto& node : nodes)
    if (node.role == role) return &node;
  return nullptr;
}

int TextStructure::index_of(const Role& role) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].role == role) return static_cast<int>(i);
  return -1;
}

namespace {

int require_index(const TextStructure& ts, const Role& role,
                  const char* op) {
  int i = ts.index_of(role);
  if (i < 0)
    throw StructureError(std::string(op) + ": role '" + role.name +
                         "' not present in structure");
  return i;
}

// Re-derives boundaries after nodes were reordered: a pair that remains
// adjacent keeps its boundary, any new adjacency defaults to SAME-SENTENCE.
std::vector<Boundary> carry_boundaries(const std::vector<TextNode>& before,
                                       const std::vector<Boundary>& bounds,
                                       const std::vector<TextNode>& after) {
  std::map<std::pair<std::string, std::string>, Boundary> pairs;
  for (size_t i = 0; i + 1 < before.size(); ++i) {
    std::string a = before[i].role.name, b = before[i + 1].role.name;
    if (a > b) std::swap(a, b);
    pairs[{a, b}] = bounds[i];
  }
  std::vector<Boundary> out;
  for (size_t i = 0; i + 1 < after.size(); ++i) {
    std::string a = after[i].role.name, b = after[i + 1].role.name;
    if (a > b) std::swap(a, b);
    auto it = pairs.find({a, b});
    out.push_back(it == pairs.end() ? Boundary::SameSentence : it->second);
  }
  return out;
}

}  // namespace

TextStructure insert_node(const TextStructure& ts, const Role& role,
                          const std::string& action_id) {
  if (ts.find(role))
    throw StructureError("insert: duplicate role '" + role.name + "'");
  TextStructure out = ts;
  out.nodes.push_back(TextNode{role, action_id});
  if (out.nodes.size() > 1) out.boundaries.push_back(Boundary::SameSentence);
  return out;
}

TextStructure order_nodes(const TextStructure& ts, const Role& first,
                          const Role& second) {
  if (first == second)
    throw StructureError("order: roles must be distinct, got '" + first.name +
                         "' twice");
  int i = require_index(ts, first, "order");
  int j = require_index(ts, second, "order");
  if (i < j) return ts;

  TextStructure out = ts;
  TextNode moved = out.nodes[i];
  out.nodes.erase(out.nodes.begin() + i);
  j = out.index_of(second);
  out.nodes.insert(out.nodes.begin() + j, moved);
  out.boundaries = carry_boundaries(ts.nodes, ts.boundaries, out.nodes);
  return out;
}

TextStructure mark_node(const TextStructure& ts, const Role& role,
                        MarkAttribute attribute, const std::string& value) {
  int i = require_index(ts, role, "mark");
  TextStructure out = ts;
  if (attribute == MarkAttribute::Linker) {
    auto linker = linker_from_token(value);
    if (!linker)
      throw StructureError("mark: '" + value +
                           "' is not in the linker vocabulary");
    out.nodes[i].linker = *linker;
  } else {
    auto form = form_from_token(value);
    if (!form)
      throw StructureError("mark: '" + value +
                           "' is not in the form vocabulary");
    out.nodes[i].form = *form;
  }
  return out;
}

TextStructure set_boundary(const TextStructure& ts, const Role& a,
                           const Role& b, Boundary boundary) {
  int i = require_index(ts, a, "combine");
  int j = require_index(ts, b, "combine");
  if (i > j) std::swap(i, j);
  if (j - i != 1)
    throw StructureError("combine: roles '" + a.name + "' and '" + b.name +
                         "' are not adjacent");
  TextStructure out = ts;
  out.boundaries[i] = boundary;
  return out;
}

TextStructure demote_node(const TextStructure& ts, const Role& role) {
  int i = require_index(ts, role, "demote");
  if (ts.nodes[i].role.is_nucleus())
    throw StructureError("demote: the Nucleus cannot trail itself");
  if (ts.nodes[i].form && *ts.nodes[i].form != Form::NominalPhrase)
    throw StructureError("demote: node '" + role.name +
                         "' already has a non-nominal form");
  int n = ts.index_of(kNucleus);
  if (n < 0) throw StructureError("demote: structure has no Nucleus node");

  TextStructure out = ts;
  TextNode moved = out.nodes[i];
  moved.form = Form::NominalPhrase;
  moved.demoted = true;
  out.nodes.erase(out.nodes.begin() + i);
  n = out.index_of(kNucleus);
  out.nodes.insert(out.nodes.begin() + n + 1, moved);
  out.boundaries = carry_boundaries(ts.nodes, ts.boundaries, out.nodes);
  // A demoted phrase always shares the sentence of its nucleus.
  out.boundaries[n] = Boundary::SameSentence;
  return out;
}

std::string dump(const TextStructure& ts) {
  std::ostringstream os;
  for (size_t i = 0; i < ts.nodes.size(); ++i) {
    const TextNode& n = ts.nodes[i];
    os << "node " << i << " role=" << n.role.name << " action=" << n.action_id
       << " linker=\"" << to_string(n.linker) << "\" form="
       << (n.form ? to_string(*n.form) : "-")
       << " demoted=" << (n.demoted ? "yes" : "no") << "\n";
    if (i + 1 < ts.nodes.size())
      os << "boundary " << i << "|" << i + 1 << " "
         << to_string(ts.boundaries[i]) << "\n";
  }
  return os.str();
}

}  // namespace sysnet
