#pragma once

#include <cstddef>
#include <vector>

#include "ordaut/automaton.hpp"

namespace ordaut {

struct Component {
  std::vector<StateId> members;  // ascending
  bool nontrivial = false;       // contains a cycle (possibly a self-loop)
  // Longest chain of nontrivial components starting here and descending along
  // reachability; 0 for trivial components.
  std::size_t height = 0;
  bool final_singleton = false;  // trivial and its state is final
};

// Strongly connected components of a DFA. Component ids are a topological
// order: if component i reaches component j != i then i < j.
struct Condensation {
  std::vector<std::size_t> component_of;  // per state
  std::vector<Component> components;
  std::vector<std::size_t> topological_order;  // 0, 1, ..., size-1
  std::size_t max_height = 0;

  const Component& of(StateId q) const { return components[component_of[q]]; }
  // Member of K: a nontrivial component or a single final state.
  bool is_key(std::size_t c) const {
    return components[c].nontrivial || components[c].final_singleton;
  }
};

Condensation condense(const Dfa& a);

}  // namespace ordaut
