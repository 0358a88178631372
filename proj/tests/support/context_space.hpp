#pragma once

// Exhaustive enumeration of the finite precondition context space, filtered
// to the combinations the schema invariants allow. Used by property tests
// and the acceptance suite.

#include <string>
#include <vector>

#include "sysnet/precond.hpp"

namespace sysnet::testing {

struct SpacePoint {
  PrecondContext ctx;
  LexicalEntry entry;
};

inline LexicalEntry space_entry(bool active, bool relational, bool nominal) {
  LexicalEntry entry;
  entry.action_id = "space-action";
  entry.imperative_form = "do the thing";
  entry.agentless_passive_clause = "the thing is done";
  entry.sensing_clause = "you hear the thing";
  entry.alternate_clause = "elsewhere";
  if (active) entry.present_active_clause = "the thing happens";
  if (relational) entry.relational_state_clause = "the thing is ready";
  if (nominal) entry.nominal_phrase = "the thing";
  return entry;
}

// Every valid (context, lexicon-entry) pair. Availability flags vary with
// the entry so form fallbacks are covered.
inline std::vector<SpacePoint> enumerate_valid_space() {
  using enum ActionCategory;
  std::vector<SpacePoint> space;
  for (Probability prob : {Probability::High, Probability::NotHigh})
  for (bool changeable : {false, true})
  for (LogicalNature nature : {LogicalNature::Simple, LogicalNature::Exclusive,
                               LogicalNature::Disjunctive})
  for (bool thematic : {false, true})
  for (bool obvious : {false, true})
  for (ActorType actor : {ActorType::Reader, ActorType::NonReader})
  for (ActionCategory category : {Monitor, Giving, Placing, HabitualDecision,
                                  Other})
  for (bool repeated : {false, true})
  for (ClauseComplexity complexity : {ClauseComplexity::Normal,
                                      ClauseComplexity::LongOrComplex})
  for (bool inception : {false, true})
  for (bool nominalized : {false, true})
  for (bool active : {false, true})
  for (bool relational : {false, true})
  for (bool nominal : {false, true}) {
    SpacePoint point;
    point.ctx.conditional = true;
    point.ctx.probability = prob;
    point.ctx.changeable = changeable;
    point.ctx.logical_nature = nature;
    point.ctx.thematic = thematic;
    point.ctx.obvious = obvious;
    point.ctx.actor = actor;
    point.ctx.category = category;
    point.ctx.repeated_mention = repeated;
    point.ctx.complexity = complexity;
    point.ctx.inception_witnessed = inception;
    point.ctx.nominalized = nominalized;
    point.entry = space_entry(active, relational, nominal);
    if (context_violations(point.ctx, point.entry).empty())
      space.push_back(std::move(point));
  }
  return space;
}

}  // namespace sysnet::testing
