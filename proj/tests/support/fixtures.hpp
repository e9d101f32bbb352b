#pragma once

// Shared automata, generators and independent oracles for the test suites.
// Nothing here calls the counting or extraction code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"

namespace ordaut::testing {

// Six-state automaton for w^3*2 + w: q0 --0--> q1, q0 --1--> s1,
// q1 --0,1--> s3, s_i --1--> s_i, s_i --0--> s_{i-1}, s0 final.
struct ExampleStates {
  static constexpr StateId q0 = 0, q1 = 1, s0 = 2, s1 = 3, s2 = 4, s3 = 5;
};

inline Dfa example_automaton() {
  using S = ExampleStates;
  Dfa a(6, S::q0);
  a.set_final(S::s0);
  a.set_transition(S::q0, Letter::zero, S::q1);
  a.set_transition(S::q0, Letter::one, S::s1);
  a.set_transition(S::q1, Letter::zero, S::s3);
  a.set_transition(S::q1, Letter::one, S::s3);
  const StateId tower[] = {S::s0, S::s1, S::s2, S::s3};
  for (int i = 1; i <= 3; ++i) {
    a.set_transition(tower[i], Letter::one, tower[i]);
    a.set_transition(tower[i], Letter::zero, tower[i - 1]);
  }
  return a;
}

inline Dfa from_edges(std::size_t n, StateId initial, std::vector<StateId> finals,
                      std::vector<std::tuple<StateId, int, StateId>> edges) {
  Dfa a(n, initial);
  for (StateId f : finals) a.set_final(f);
  for (auto [p, l, q] : edges) a.set_transition(p, static_cast<Letter>(l), q);
  return a;
}

// Random ordinal automaton built bottom-up: each new unit is a final sink, a
// trivial branching state, or a 1-cycle whose 0-edges leave to earlier units.
// Edges favour units nothing points to yet, so most units stay reachable.
// Trimmed, so the result has at most `max_states` states.
inline Dfa random_ordinal_automaton(std::mt19937_64& rng, std::size_t max_states, bool acyclic) {
  std::uniform_int_distribution<int> pct(0, 99);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  Dfa a(1, 0);
  a.set_final(0);
  std::vector<StateId> entries{0};  // states a new unit may point to
  std::vector<StateId> loose{0};    // entries nothing points to yet
  auto pick = [&] {
    StateId q;
    if (!loose.empty() && pct(rng) < 60) {
      q = loose.back();
    } else {
      q = entries[std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)];
    }
    std::erase(loose, q);
    return q;
  };
  while (a.size() < target) {
    const int roll = pct(rng);
    if (roll < 10) {
      StateId f = a.add_state();
      a.set_final(f);
      entries.push_back(f);
      loose.push_back(f);
    } else if (acyclic || roll < 70) {
      StateId q = a.add_state();
      a.set_transition(q, Letter::zero, pick());
      a.set_transition(q, Letter::one, pick());
      entries.push_back(q);
      loose.push_back(q);
    } else {
      std::size_t len = std::min<std::size_t>(target - a.size(), 1 + pct(rng) % 3);
      std::vector<StateId> cycle;
      for (std::size_t i = 0; i < len; ++i) cycle.push_back(a.add_state());
      for (std::size_t i = 0; i < len; ++i) {
        a.set_transition(cycle[i], Letter::zero, pick());
        a.set_transition(cycle[i], Letter::one, cycle[(i + 1) % len]);
      }
      for (StateId s : cycle) entries.push_back(s);
      loose.push_back(cycle.front());
    }
  }
  a.set_initial(entries.back());
  return trim(a);
}

inline Cnf random_cnf(std::mt19937_64& rng, std::size_t max_degree, std::uint64_t max_coeff) {
  std::vector<Term> terms;
  for (std::size_t e = max_degree + 1; e-- > 0;) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
    terms.push_back(Term{e, std::uniform_int_distribution<std::uint64_t>(1, max_coeff)(rng)});
  }
  if (terms.empty()) terms.push_back(Term{0, 1});
  return Cnf(std::move(terms));
}

// Brute force: accepted words greater than `threshold` that end in a target.
inline std::uint64_t count_by_enumeration(const Dfa& a, const std::vector<StateId>& targets,
                                          const std::optional<Word>& threshold) {
  std::uint64_t n = 0;
  for (const Word& w : enumerate_language(a, a.size())) {
    StateId end = a.run(a.initial(), w);
    if (std::find(targets.begin(), targets.end(), end) == targets.end()) continue;
    if (!threshold || *threshold < w) ++n;
  }
  return n;
}

// Literal dense-matrix evaluation of the threshold counting formula for an
// acyclic automaton: sum over l with u_l = 0 of
//   e M_{u_1}..M_{u_{l-1}} M_1 (sum_{j=first_power}^{n-l} (M_0 + M_1)^j) f.
// first_power = 0 counts the word u_1..u_{l-1}1 itself.
inline Natural count_by_matrices(const Dfa& a, const std::vector<StateId>& targets, const Word& u,
                                 std::size_t first_power) {
  const std::size_t n = a.size();
  using Matrix = std::vector<std::vector<Natural>>;
  auto zero = [&] { return Matrix(n, std::vector<Natural>(n)); };
  auto mul = [&](const Matrix& x, const Matrix& y) {
    Matrix z = zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  Matrix m[2] = {zero(), zero()}, id = zero();
  for (StateId q = 0; q < n; ++q) {
    id[q][q] = 1;
    for (Letter l : kLetters)
      if (StateId t = a.next(q, l); t != kNoState) m[static_cast<int>(l)][q][t] = 1;
  }
  Matrix both = zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) both[i][j] = m[0][i][j] + m[1][i][j];

  Natural total = 0;
  Matrix prefix = id;
  for (std::size_t l = 1; l <= u.size(); ++l) {
    const int letter = u[l - 1] - '0';
    if (letter == 0) {
      Matrix sum = zero(), power = id;
      for (std::size_t j = 0; j + l <= n; ++j) {
        if (j >= first_power)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sum[r][c] += power[r][c];
        power = mul(power, both);
      }
      Matrix term = mul(mul(prefix, m[1]), sum);
      for (StateId t : targets) total += term[a.initial()][t];
    }
    prefix = mul(prefix, m[letter]);
  }
  return total;
}

}  // namespace ordaut::testing
