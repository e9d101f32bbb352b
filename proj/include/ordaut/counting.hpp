#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/condensation.hpp"
#include "ordaut/ordinal.hpp"

namespace ordaut {

// Acyclic view of an ordinal automaton. Keeps the states of trivial
// components and gives each nontrivial component a fresh sink; a transition
// entering a nontrivial component C goes to C's sink instead. A single final
// state is its own sink. The words from the initial state to the sink of C
// are exactly the words leading from the initial state to C.
//
// States are numbered in topological order, and the sinks are the final
// states of `graph`.
struct DagAutomaton {
  Dfa graph;
  std::vector<StateId> sink_of;  // per component of the source; kNoState unless in K
  std::vector<StateId> origin;   // per dag state: source state, kNoState for fresh sinks
  std::vector<StateId> view_of;  // per source state: its dag state, kNoState inside nontrivial components

  std::size_t size() const noexcept { return graph.size(); }
  bool is_sink(StateId q) const { return graph.is_final(q); }
  std::vector<StateId> sinks() const { return graph.finals(); }
};

// Throws PreconditionError unless `a` is an ordinal automaton whose initial
// state is neither in a nontrivial component nor final.
DagAutomaton build_dag_view(const Dfa& a, const Condensation& c);

// Per dag state: how many words from the initial state reach it and are
// lexicographically greater than `threshold` (all words when absent). The
// threshold must lead from the initial state to a sink.
std::vector<Natural> count_words_above(const DagAutomaton& d, const std::optional<Word>& threshold);

// Number of words v from the initial state to one of `targets` with
// threshold < v. Throws PreconditionError if the threshold does not lead to a
// sink or a target is not a sink.
Natural count_accepted_greater(const DagAutomaton& d, std::span<const StateId> targets,
                               const std::optional<Word>& threshold);

// Lexicographically greatest word from the initial state to `q`.
// Throws PreconditionError if q is unreachable.
Word lex_greatest_word_to(const DagAutomaton& d, StateId q);

}  // namespace ordaut
