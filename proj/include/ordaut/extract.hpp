#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"

namespace ordaut {

struct ComponentCount {
  std::size_t component = 0;    // id in condense(a)
  Natural count = 0;            // words leading to it above the previous threshold
  std::optional<Word> witness;  // greatest word leading to it; present iff count > 0
};

struct DegreeStep {
  std::size_t degree = 0;
  std::vector<ComponentCount> bucket;
  Natural total = 0;
  std::optional<Word> threshold;  // greatest witness over this and all higher degrees
};

struct ExtractionTrace {
  // Set when the initial state is itself in a nontrivial component or final;
  // no steps are recorded then.
  bool initial_in_key_component = false;
  std::vector<DegreeStep> steps;  // degrees in decreasing order
};

struct Extraction {
  Cnf ordinal;
  ExtractionTrace trace;
};

// Ordinal of the lexicographic ordering accepted by an ordinal automaton, by
// counting words leading into each component from the highest height down.
// Polynomial in the number of states. Throws PreconditionError on a non-OA.
Extraction ordinal_of(const Dfa& a);

// Ordinal of every state, evaluated bottom-up over the components:
// o(final) = 1, o(q) = o(q0) + o(q1) on trivial states and
// o(C) = (o(s_0 0) + ... + o(s_{k-1} 0)) * w around a 1-cycle s_0 .. s_{k-1}.
// Throws std::logic_error if a component's value is not w^height.
std::vector<Cnf> state_ordinals(const Dfa& a);
Cnf ordinal_of_recursive(const Dfa& a);

// Word count of an acyclic CPA, by listing the words. Throws
// PreconditionError on cyclic input or when there are more than `word_limit`.
Cnf ordinal_of_enumerative(const Dfa& a, std::size_t word_limit = std::size_t{1} << 22);

// Whether two ordinal automata have isomorphic lexicographic orderings.
bool isomorphic(const Dfa& a, const Dfa& b);

}  // namespace ordaut
