#pragma once

#include <string>
#include <vector>

#include "sysnet/precond.hpp"
#include "sysnet/text_structure.hpp"

namespace sysnet {

struct RealizedText {
  std::vector<std::string> sentences;
  std::string joined;  // sentences joined with single spaces
};

// Renders one node through its lexical entry: picks the clause variant the
// node's form calls for and prefixes the node's linker token. A lexicon gap
// (no variant for the form, no alternate for whether/or) raises InputError.
// With suppress_linker the bare clause is returned, as when a later
// coordinated clause shares the first clause's linker.
std::string realize_clause(const TextNode& node, const Lexicon& lexicon,
                           bool suppress_linker = false);

// Renders a whole sentence plan. Nodes separated by a SEPARATE-SENTENCE
// boundary start a new sentence; within a sentence, clauses are joined by
// ", and " (two conditions in a row, the second losing its linker), ", "
// (condition leading into its nucleus), or a plain space. Sentences are
// capitalized and end with a period.
RealizedText realize_text(const TextStructure& ts, const Lexicon& lexicon);

// One RealizedText per step of the plan.
std::vector<RealizedText> realize_document(const DocumentPlan& plan,
                                           const Lexicon& lexicon);

// All steps as one paragraph.
std::string joined_document(const std::vector<RealizedText>& steps);

// One numbered line per step: "1. ...".
std::string number_steps(const std::vector<RealizedText>& steps);

}  // namespace sysnet
