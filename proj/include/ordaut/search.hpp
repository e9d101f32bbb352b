#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"

namespace ordaut {

inline constexpr std::size_t kDefaultSearchStates = 9;

// 1 = a_1 < ... < a_k = n, each a_i (i > 1) the sum of two earlier elements.
struct AdditionChain {
  std::vector<std::uint64_t> elements;

  std::size_t length() const noexcept { return elements.size(); }
  bool is_valid() const;
};

// Minimal element count, lexicographically least among the minimal chains.
// Iterative deepening from ceil(log2 n) + 1 elements.
AdditionChain shortest_addition_chain(std::uint64_t n);

// A smallest acyclic CPA whose final states c_0 .. c_k realize `counts`:
// exactly counts[i] words reach c_i with no lexicographically greater word
// reaching some c_j, j < i.
struct OrderedCpa {
  std::size_t states = 0;
  Dfa witness;                       // canonically (breadth-first) numbered
  std::vector<StateId> final_order;  // c_0 .. c_k as witness states
};

// The minimum state count above by exhaustive search over acyclic CPAs in
// increasing size. Throws SearchBoundExceeded past `max_states`, and
// PreconditionError on an empty tuple or a zero count.
OrderedCpa min_ordered_cpa(std::span<const std::uint64_t> counts,
                           std::size_t max_states = kDefaultSearchStates);

// Smallest number of states of an ordinal automaton for alpha:
// n0 - k + min_ordered_cpa(m0, ..., mk).states.
std::size_t min_size(const Cnf& alpha, std::size_t max_states = kDefaultSearchStates);

// Calls `visit` once per isomorphism class of complete prefix automata with
// exactly `states` states, each given in breadth-first canonical numbering.
void for_each_cpa(std::size_t states, const std::function<void(const Dfa&)>& visit);

}  // namespace ordaut
