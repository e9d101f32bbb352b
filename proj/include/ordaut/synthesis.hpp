#pragma once

#include <cstddef>
#include <span>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"

namespace ordaut {

// The tower with states s_n .. s_0 (s_i has id n - i): s_i --1--> s_i and
// s_i --0--> s_{i-1}; initial s_n, final s_0. Represents w^n with n+1 states.
Dfa power_automaton(std::size_t n);

// Acyclic CPA with a single final sink accepting exactly m words, built from
// D_1 (one state) by D_2k = new root with both letters to D_k, and
// D_2k+1 = root --0--> mid --0,1--> D_k, root --1--> final of D_k.
// Has finite_block_size(m) states. Throws PreconditionError for m = 0.
Dfa finite_block(const Natural& m);

// g(1) = 1, g(2m) = 1 + g(m), g(2m+1) = 2 + g(m).
std::size_t finite_block_size(const Natural& m);

// Places the languages of the blocks in consecutive lexicographic order.
// With k+1 blocks, glue states 0..k-1 come first (glue i --0--> block i,
// glue i --1--> glue i+1, last glue --1--> block k), then each block's states
// shifted by the sizes before it. Throws PreconditionError on an empty list.
Dfa ordered_sum(std::span<const Dfa> blocks);

// An ordinal automaton for alpha with synthesis_size_bound(alpha) states.
// Throws PreconditionError for alpha = 0.
Dfa synthesize(const Cnf& alpha);

// n0 + 1 for w^n0, otherwise n0 + g(m0) + ... + g(mk).
std::size_t synthesis_size_bound(const Cnf& alpha);

}  // namespace ordaut
