#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysnet/errors.hpp"

namespace sysnet {

// Grammatical role of a node in a sentence plan. Nucleus and Precond are the
// two roles the shipped grammar knows about; document assembly may mint
// extended precondition roles (Precond-2, ...) to keep roles unique within a
// structure.
struct Role {
  std::string name;

  bool operator==(const Role&) const = default;
  bool is_nucleus() const { return name == "Nucleus"; }
};

inline const Role kNucleus{"Nucleus"};
inline const Role kPrecond{"Precond"};

// Closed vocabulary of grammatical forms a clause can be realized in.
enum class Form {
  Imperative,
  MonitorImperative,
  MakeSureImperative,
  PresentActive,
  PresentAgentlessPassive,
  RelationalState,
  SensingPresent,
  NominalPhrase,
};

// Closed vocabulary of linker tokens. None renders as the empty string and is
// the resting state of make-sure and monitor clauses.
enum class Linker {
  None,
  When,
  If,
  OnlyIf,
  WhetherOr,
  After,
};

enum class Boundary {
  SameSentence,
  SeparateSentence,
};

enum class MarkAttribute {
  Linker,
  Form,
};

std::string to_string(Form form);
std::string to_string(Linker linker);  // surface token: "when", "only if", ""
std::string to_string(Boundary boundary);
std::string to_string(MarkAttribute attribute);
std::optional<Form> form_from_token(const std::string& token);
std::optional<Linker> linker_from_token(const std::string& token);
std::optional<Boundary> boundary_from_token(const std::string& token);

struct TextNode {
  Role role;
  std::string action_id;
  Linker linker = Linker::None;
  std::optional<Form> form;
  bool demoted = false;

  bool operator==(const TextNode&) const = default;
};

// An ordered sentence plan. boundaries[i] separates nodes[i] and nodes[i+1];
// its size is nodes.size() - 1 (0 for empty or singleton structures).
struct TextStructure {
  std::vector<TextNode> nodes;
  std::vector<Boundary> boundaries;

  bool operator==(const TextStructure&) const = default;
  const TextNode* find(const Role& role) const;
  int index_of(const Role& role) const;  // -1 when absent
};

// All operations are pure: they return a new structure and never mutate the
// argument. Violated preconditions raise StructureError.

// Appends a node with the given role. The role must not already be present.
// A new trailing boundary defaults to SAME-SENTENCE.
TextStructure insert_node(const TextStructure& ts, const Role& role,
                          const std::string& action_id);

// Reorders so that `first` precedes `second`, preserving the relative order
// of all other nodes. Roles must be distinct and present. Boundaries between
// pairs that stay adjacent are preserved; new adjacencies default to
// SAME-SENTENCE.
TextStructure order_nodes(const TextStructure& ts, const Role& first,
                          const Role& second);

// Sets the linker or form of a node. The value must belong to the attribute's
// closed vocabulary. Later marks overwrite earlier marks.
TextStructure mark_node(const TextStructure& ts, const Role& role,
                        MarkAttribute attribute, const std::string& value);

// Sets the boundary between two adjacent nodes (in either order).
TextStructure set_boundary(const TextStructure& ts, const Role& a,
                           const Role& b, Boundary boundary);

// Rhetorical demotion: the node becomes a trailing phrase placed immediately
// after the Nucleus, shares its sentence, and takes the NOMINAL-PHRASE form.
// The node's form must be NOMINAL-PHRASE or unset. Idempotent.
TextStructure demote_node(const TextStructure& ts, const Role& role);

// Deterministic diagnostic dump, one node/boundary per line.
std::string dump(const TextStructure& ts);

}  // namespace sysnet
