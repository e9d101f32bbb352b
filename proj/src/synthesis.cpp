#include "ordaut/synthesis.hpp"

#include <vector>

#include "ordaut/errors.hpp"

namespace ordaut {

Dfa power_automaton(std::size_t n) {
  Dfa a(n + 1, 0);
  a.set_final(static_cast<StateId>(n));
  for (StateId id = 0; id < n; ++id) {
    a.set_transition(id, Letter::one, id);
    a.set_transition(id, Letter::zero, id + 1);
  }
  return a;
}

std::size_t finite_block_size(const Natural& m) {
  if (m < 1) throw PreconditionError("a finite block needs at least one word");
  std::size_t size = 1;
  for (Natural k = m; k > 1; k >>= 1) size += (k & 1) ? 2 : 1;
  return size;
}

Dfa finite_block(const Natural& m) {
  if (m < 1) throw PreconditionError("a finite block needs at least one word");
  // Bits of m below the leading one, most significant first, decide the
  // construction steps from D_1 outward.
  std::vector<bool> odd_steps;
  for (Natural k = m; k > 1; k >>= 1) odd_steps.push_back((k & 1) != 0);

  Dfa a(1, 0);
  const StateId final_state = 0;
  a.set_final(final_state);
  for (auto it = odd_steps.rbegin(); it != odd_steps.rend(); ++it) {
    const StateId old_root = a.initial();
    const StateId root = a.add_state();
    if (*it) {
      const StateId mid = a.add_state();
      a.set_transition(root, Letter::zero, mid);
      a.set_transition(root, Letter::one, final_state);
      a.set_transition(mid, Letter::zero, old_root);
      a.set_transition(mid, Letter::one, old_root);
    } else {
      a.set_transition(root, Letter::zero, old_root);
      a.set_transition(root, Letter::one, old_root);
    }
    a.set_initial(root);
  }
  return a;
}

Dfa ordered_sum(std::span<const Dfa> blocks) {
  if (blocks.empty()) throw PreconditionError("ordered sum of no automata");
  const std::size_t glue = blocks.size() - 1;
  std::vector<StateId> offset;
  std::size_t total = glue;
  for (const Dfa& b : blocks) {
    offset.push_back(static_cast<StateId>(total));
    total += b.size();
  }

  Dfa out(total, glue == 0 ? offset[0] + blocks[0].initial() : 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Dfa& b = blocks[i];
    for (StateId q = 0; q < b.size(); ++q) {
      out.set_final(offset[i] + q, b.is_final(q));
      for (Letter l : kLetters)
        if (StateId t = b.next(q, l); t != kNoState) out.set_transition(offset[i] + q, l, offset[i] + t);
    }
  }
  for (StateId g = 0; g < glue; ++g) {
    out.set_transition(g, Letter::zero, offset[g] + blocks[g].initial());
    out.set_transition(g, Letter::one,
                       g + 1 < glue ? g + 1 : offset[glue] + blocks[glue].initial());
  }
  return out;
}

std::size_t synthesis_size_bound(const Cnf& alpha) {
  if (alpha.is_zero()) throw PreconditionError("cannot synthesize the ordinal 0");
  const auto& terms = alpha.terms();
  if (terms.size() == 1 && terms[0].coefficient == 1) return terms[0].exponent + 1;
  std::size_t size = terms[0].exponent;
  for (const Term& t : terms) size += finite_block_size(t.coefficient);
  return size;
}

Dfa synthesize(const Cnf& alpha) {
  if (alpha.is_zero()) throw PreconditionError("cannot synthesize the ordinal 0");
  const auto& terms = alpha.terms();
  const std::size_t degree = terms[0].exponent;
  if (terms.size() == 1 && terms[0].coefficient == 1) return power_automaton(degree);

  std::vector<Dfa> blocks;
  for (const Term& t : terms) blocks.push_back(finite_block(t.coefficient));
  Dfa sum = ordered_sum(blocks);

  // Block i's final state becomes tower state s_{n_i}; the remaining tower
  // states get fresh ids.
  std::vector<StateId> tower(degree + 1, kNoState);
  StateId offset = static_cast<StateId>(blocks.size() - 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    tower[terms[i].exponent] = offset + blocks[i].finals().front();
    offset += static_cast<StateId>(blocks[i].size());
  }
  for (auto& s : tower)
    if (s == kNoState) s = sum.add_state();
  for (std::size_t i = 0; i <= degree; ++i) sum.set_final(tower[i], i == 0);
  for (std::size_t i = 1; i <= degree; ++i) {
    sum.set_transition(tower[i], Letter::one, tower[i]);
    sum.set_transition(tower[i], Letter::zero, tower[i - 1]);
  }
  return sum;
}

}  // namespace ordaut
