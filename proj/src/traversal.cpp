#include "sysnet/traversal.hpp"

#include <sstream>

#include "sysnet/errors.hpp"

namespace sysnet {

namespace {

void execute(const RealizationStatement& stmt, const std::string& unit,
             const FeatureContext& ctx, TraversalTrace& trace) {
  TextStructure& ts = trace.structure;
  switch (stmt.kind) {
    case RealizationStatement::Kind::Insert: {
      auto it = ctx.role_actions.find(stmt.role_a.name);
      if (it == ctx.role_actions.end())
        throw GrammarError("unit '" + unit + "' inserts role '" +
                           stmt.role_a.name +
                           "' but the context names no action for it");
      ts = insert_node(ts, stmt.role_a, it->second);
      break;
    }
    case RealizationStatement::Kind::Order:
      ts = order_nodes(ts, stmt.role_a, stmt.role_b);
      break;
    case RealizationStatement::Kind::Mark: {
      const TextNode* node = ts.find(stmt.role_a);
      if (node) {
        if (stmt.attribute == MarkAttribute::Linker) {
          std::string old = to_string(node->linker);
          if (node->linker != Linker::None && old != stmt.value)
            trace.overwrites.push_back(
                {unit, stmt.role_a.name, "linker", old, stmt.value});
        } else if (node->form) {
          std::string old = to_string(*node->form);
          if (old != stmt.value)
            trace.overwrites.push_back(
                {unit, stmt.role_a.name, "form", old, stmt.value});
        }
      }
      ts = mark_node(ts, stmt.role_a, stmt.attribute, stmt.value);
      break;
    }
    case RealizationStatement::Kind::Combine:
      ts = set_boundary(ts, stmt.role_a, stmt.role_b, stmt.boundary);
      break;
    case RealizationStatement::Kind::Demote:
      ts = demote_node(ts, stmt.role_a);
      break;
  }
}

}  // namespace

TraversalTrace traverse(const SystemNetwork& net, const FeatureContext& ctx,
                        const TextStructure& seed,
                        const ChoiceTable& choices) {
  for (const auto& input : net.inputs)
    if (!ctx.assignments.count(input))
      throw GrammarError("context assigns no value to input '" + input + "'");

  TraversalTrace trace;
  trace.structure = seed;
  for (const auto& input : net.inputs)
    if (ctx.flag(input)) trace.selected.insert(input);

  std::vector<bool> fired(net.units.size(), false);
  size_t fired_count = 0;
  while (fired_count < net.units.size()) {
    ++trace.scans;
    bool progressed = false;
    for (size_t u = 0; u < net.units.size(); ++u) {
      if (fired[u]) continue;
      const ChoicePoint& unit = net.units[u];
      if (!entry_satisfied(unit.entry, trace.selected)) continue;

      const Choice* chosen = nullptr;
      if (unit.kind == UnitKind::Gate) {
        chosen = &unit.choices.front();
      } else {
        auto fn = choices.find(unit.name);
        if (fn == choices.end())
          throw GrammarError("no choice function registered for system '" +
                             unit.name + "'");
        std::string feature = fn->second(ctx);
        for (const auto& choice : unit.choices)
          if (choice.feature == feature) chosen = &choice;
        if (!chosen)
          throw GrammarError("choice function for system '" + unit.name +
                             "' returned '" + feature +
                             "', which the system does not declare");
      }

      fired[u] = true;
      ++fired_count;
      progressed = true;
      trace.selected.insert(chosen->feature);

      FiredRecord record;
      record.unit = unit.name;
      record.feature = chosen->feature;
      record.entry = to_string(unit.entry);
      for (const auto& stmt : chosen->statements) {
        record.statements.push_back(to_string(stmt));
        execute(stmt, unit.name, ctx, trace);
      }
      trace.fired.push_back(std::move(record));
    }
    if (!progressed) break;
  }
  return trace;
}

std::string explain(const TraversalTrace& trace) {
  std::ostringstream os;
  if (trace.fired.empty()) {
    os << "no systems fired\n";
    return os.str();
  }
  for (size_t i = 0; i < trace.fired.size(); ++i) {
    const FiredRecord& record = trace.fired[i];
    os << (i + 1) << ". " << record.unit << " -> " << record.feature
       << " [entry: " << record.entry << "]\n";
    for (const auto& stmt : record.statements) {
      os << "     " << stmt;
      for (const auto& ow : trace.overwrites)
        if (ow.unit == record.unit && stmt.rfind("mark ", 0) == 0 &&
            stmt.find(ow.new_value) != std::string::npos)
          os << " (overwrites \"" << ow.old_value << "\")";
      os << "\n";
    }
  }
  return os.str();
}

std::string dump(const TraversalTrace& trace) {
  std::ostringstream os;
  os << "scans " << trace.scans << "\n";
  for (const auto& record : trace.fired) {
    os << "fired " << record.unit << " " << record.feature << "\n";
    for (const auto& stmt : record.statements) os << "  " << stmt << "\n";
  }
  os << "selected";
  for (const auto& feature : trace.selected) os << " " << feature;
  os << "\n";
  os << dump(trace.structure);
  return os.str();
}

}  // namespace sysnet
