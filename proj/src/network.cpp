#include "sysnet/network.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sysnet {

EntryCondition EntryCondition::truth() { return EntryCondition{}; }

EntryCondition EntryCondition::ref(std::string name) {
  EntryCondition c;
  c.kind = Kind::Ref;
  c.name = std::move(name);
  return c;
}

EntryCondition EntryCondition::negation(EntryCondition arg) {
  EntryCondition c;
  c.kind = Kind::Not;
  c.args.push_back(std::move(arg));
  return c;
}

EntryCondition EntryCondition::conjunction(std::vector<EntryCondition> args) {
  if (args.size() == 1) return std::move(args.front());
  EntryCondition c;
  c.kind = Kind::And;
  c.args = std::move(args);
  return c;
}

EntryCondition EntryCondition::disjunction(std::vector<EntryCondition> args) {
  if (args.size() == 1) return std::move(args.front());
  EntryCondition c;
  c.kind = Kind::Or;
  c.args = std::move(args);
  return c;
}

bool entry_satisfied(const EntryCondition& cond,
                     const std::set<std::string>& selected) {
  switch (cond.kind) {
    case EntryCondition::Kind::True:
      return true;
    case EntryCondition::Kind::Ref:
      return selected.count(cond.name) > 0;
    case EntryCondition::Kind::Not:
      return !entry_satisfied(cond.args.front(), selected);
    case EntryCondition::Kind::And:
      return std::all_of(cond.args.begin(), cond.args.end(),
                         [&](const EntryCondition& a) {
                           return entry_satisfied(a, selected);
                         });
    case EntryCondition::Kind::Or:
      return std::any_of(cond.args.begin(), cond.args.end(),
                         [&](const EntryCondition& a) {
                           return entry_satisfied(a, selected);
                         });
  }
  return false;
}

namespace {

int precedence(EntryCondition::Kind kind) {
  switch (kind) {
    case EntryCondition::Kind::Or:
      return 1;
    case EntryCondition::Kind::And:
      return 2;
    case EntryCondition::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void render(const EntryCondition& cond, int parent, std::string& out) {
  int self = precedence(cond.kind);
  bool parens = self < parent;
  if (parens) out += "(";
  switch (cond.kind) {
    case EntryCondition::Kind::True:
      out += "*";
      break;
    case EntryCondition::Kind::Ref:
      out += cond.name;
      break;
    case EntryCondition::Kind::Not:
      out += "!";
      render(cond.args.front(), self, out);
      break;
    case EntryCondition::Kind::And:
    case EntryCondition::Kind::Or: {
      const char* sep = cond.kind == EntryCondition::Kind::And ? " & " : " | ";
      for (size_t i = 0; i < cond.args.size(); ++i) {
        if (i) out += sep;
        render(cond.args[i], self, out);
      }
      break;
    }
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const EntryCondition& cond) {
  std::string out;
  render(cond, 0, out);
  return out;
}

void collect_refs(const EntryCondition& cond, std::vector<std::string>& out) {
  if (cond.kind == EntryCondition::Kind::Ref) {
    out.push_back(cond.name);
    return;
  }
  for (const auto& arg : cond.args) collect_refs(arg, out);
}

RealizationStatement insert_stmt(Role role) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Insert;
  s.role_a = std::move(role);
  return s;
}

RealizationStatement order_stmt(Role first, Role second) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Order;
  s.role_a = std::move(first);
  s.role_b = std::move(second);
  return s;
}

RealizationStatement mark_linker_stmt(Role role, std::string token) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Mark;
  s.role_a = std::move(role);
  s.attribute = MarkAttribute::Linker;
  s.value = std::move(token);
  return s;
}

RealizationStatement mark_form_stmt(Role role, std::string token) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Mark;
  s.role_a = std::move(role);
  s.attribute = MarkAttribute::Form;
  s.value = std::move(token);
  return s;
}

RealizationStatement combine_stmt(Role a, Role b, Boundary boundary) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Combine;
  s.role_a = std::move(a);
  s.role_b = std::move(b);
  s.boundary = boundary;
  return s;
}

RealizationStatement demote_stmt(Role role) {
  RealizationStatement s;
  s.kind = RealizationStatement::Kind::Demote;
  s.role_a = std::move(role);
  return s;
}

std::string to_string(const RealizationStatement& stmt) {
  switch (stmt.kind) {
    case RealizationStatement::Kind::Insert:
      return "insert " + stmt.role_a.name;
    case RealizationStatement::Kind::Order:
      return "order " + stmt.role_a.name + " before " + stmt.role_b.name;
    case RealizationStatement::Kind::Mark:
      if (stmt.attribute == MarkAttribute::Linker)
        return "mark linker " + stmt.role_a.name + " \"" + stmt.value + "\"";
      return "mark form " + stmt.role_a.name + " " + stmt.value;
    case RealizationStatement::Kind::Combine:
      return "combine " + stmt.role_a.name + " " + stmt.role_b.name + " " +
             to_string(stmt.boundary);
    case RealizationStatement::Kind::Demote:
      return "demote " + stmt.role_a.name;
  }
  return "?";
}

const ChoicePoint* SystemNetwork::find_unit(const std::string& name) const {
  for (const auto& unit : units)
    if (unit.name == name) return &unit;
  return nullptr;
}

const ChoicePoint* SystemNetwork::home_of(const std::string& feature) const {
  for (const auto& unit : units)
    for (const auto& choice : unit.choices)
      if (choice.feature == feature) return &unit;
  return nullptr;
}

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const ValidationIssue& i) {
                        return i.severity == ValidationIssue::Severity::Error;
                      });
}

std::vector<ValidationIssue> ValidationReport::errors() const {
  std::vector<ValidationIssue> out;
  for (const auto& i : issues)
    if (i.severity == ValidationIssue::Severity::Error) out.push_back(i);
  return out;
}

std::vector<ValidationIssue> ValidationReport::warnings() const {
  std::vector<ValidationIssue> out;
  for (const auto& i : issues)
    if (i.severity == ValidationIssue::Severity::Warning) out.push_back(i);
  return out;
}

std::string to_string(const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& i : report.issues) {
    os << (i.severity == ValidationIssue::Severity::Error ? "error"
                                                          : "warning")
       << " [" << i.code << "]";
    if (!i.unit.empty()) os << " " << i.unit;
    os << ": " << i.message << "\n";
  }
  return os.str();
}

namespace {

void add_error(ValidationReport& report, std::string code, std::string unit,
               std::string message) {
  report.issues.push_back(ValidationIssue{ValidationIssue::Severity::Error,
                                          std::move(code), std::move(unit),
                                          std::move(message)});
}

void add_warning(ValidationReport& report, std::string code, std::string unit,
                 std::string message) {
  report.issues.push_back(ValidationIssue{ValidationIssue::Severity::Warning,
                                          std::move(code), std::move(unit),
                                          std::move(message)});
}

// Names that can evaluate to true when the entry is satisfiable: collects
// refs that occur under an even number of negations.
void positive_refs(const EntryCondition& cond, bool positive,
                   std::vector<std::string>& out) {
  switch (cond.kind) {
    case EntryCondition::Kind::True:
      return;
    case EntryCondition::Kind::Ref:
      if (positive) out.push_back(cond.name);
      return;
    case EntryCondition::Kind::Not:
      positive_refs(cond.args.front(), !positive, out);
      return;
    default:
      for (const auto& arg : cond.args) positive_refs(arg, positive, out);
  }
}

void check_statement(ValidationReport& report, const ChoicePoint& unit,
                     const RealizationStatement& stmt) {
  switch (stmt.kind) {
    case RealizationStatement::Kind::Order:
      if (stmt.role_a == stmt.role_b)
        add_error(report, "order-same-role", unit.name,
                  "order statement names role '" + stmt.role_a.name +
                      "' twice");
      break;
    case RealizationStatement::Kind::Mark:
      if (stmt.attribute == MarkAttribute::Linker) {
        if (!linker_from_token(stmt.value))
          add_error(report, "mark-vocabulary", unit.name,
                    "'" + stmt.value + "' is not in the linker vocabulary");
      } else if (!form_from_token(stmt.value)) {
        add_error(report, "mark-vocabulary", unit.name,
                  "'" + stmt.value + "' is not in the form vocabulary");
      }
      break;
    case RealizationStatement::Kind::Combine:
      if (stmt.role_a == stmt.role_b)
        add_warning(report, "combine-same-role", unit.name,
                    "combine statement names role '" + stmt.role_a.name +
                        "' twice");
      break;
    default:
      break;
  }
}

}  // namespace

ValidationReport validate_network(const SystemNetwork& net) {
  ValidationReport report;

  std::set<std::string> names;  // inputs and features share one namespace
  std::map<std::string, const ChoicePoint*> home;
  for (const auto& input : net.inputs) {
    if (!names.insert(input).second)
      add_error(report, "duplicate-feature", "",
                "input '" + input + "' declared more than once");
  }

  std::set<std::string> unit_names;
  for (const auto& unit : net.units) {
    if (!unit_names.insert(unit.name).second)
      add_warning(report, "duplicate-unit", unit.name,
                  "more than one system or gate named '" + unit.name + "'");
    if (unit.kind == UnitKind::System && unit.choices.size() < 2)
      add_error(report, "too-few-choices", unit.name,
                "system has " + std::to_string(unit.choices.size()) +
                    " choice(s); at least 2 required");
    if (unit.kind == UnitKind::Gate && unit.choices.size() != 1)
      add_error(report, "gate-feature-count", unit.name,
                "gate must contribute exactly one feature");
    for (const auto& choice : unit.choices) {
      if (!names.insert(choice.feature).second)
        add_error(report, "duplicate-feature", unit.name,
                  "feature '" + choice.feature + "' is not globally unique");
      else
        home[choice.feature] = &unit;
      for (const auto& stmt : choice.statements)
        check_statement(report, unit, stmt);
    }
  }

  for (const auto& unit : net.units) {
    std::vector<std::string> refs;
    collect_refs(unit.entry, refs);
    for (const auto& ref : refs)
      if (!names.count(ref))
        add_error(report, "dangling-reference", unit.name,
                  "entry references '" + ref + "', which is neither a "
                  "feature nor a declared input");
  }

  // Cycle check over the dependency graph: unit -> home unit of each entry
  // reference. 0 = unseen, 1 = on stack, 2 = done.
  std::map<const ChoicePoint*, int> state;
  std::vector<const ChoicePoint*> stack;
  auto visit = [&](auto&& self, const ChoicePoint* unit) -> bool {
    state[unit] = 1;
    stack.push_back(unit);
    std::vector<std::string> refs;
    collect_refs(unit->entry, refs);
    for (const auto& ref : refs) {
      auto it = home.find(ref);
      if (it == home.end()) continue;
      const ChoicePoint* dep = it->second;
      if (state[dep] == 1) {
        std::string cycle;
        for (auto s = std::find(stack.begin(), stack.end(), dep);
             s != stack.end(); ++s)
          cycle += (*s)->name + " -> ";
        add_error(report, "entry-cycle", unit->name,
                  "entry dependencies form a cycle: " + cycle + dep->name);
        return false;
      }
      if (state[dep] == 0 && !self(self, dep)) return false;
    }
    stack.pop_back();
    state[unit] = 2;
    return true;
  };
  for (const auto& unit : net.units)
    if (state[&unit] == 0 && !visit(visit, &unit)) break;

  // Reachability warning: a unit is potentially enterable when every
  // positively-referenced name could become active. Negated references are
  // assumed satisfiable.
  std::set<std::string> potential(net.inputs.begin(), net.inputs.end());
  std::set<const ChoicePoint*> enterable;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& unit : net.units) {
      if (enterable.count(&unit)) continue;
      std::vector<std::string> refs;
      positive_refs(unit.entry, true, refs);
      bool ok = std::all_of(refs.begin(), refs.end(), [&](const auto& r) {
        return potential.count(r) > 0;
      });
      if (!ok) continue;
      enterable.insert(&unit);
      for (const auto& choice : unit.choices) potential.insert(choice.feature);
      grew = true;
    }
  }
  for (const auto& unit : net.units)
    if (!enterable.count(&unit))
      add_warning(report, "unreachable", unit.name,
                  "entry condition can never be satisfied from the declared "
                  "inputs");

  return report;
}

}  // namespace sysnet
