#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ordaut {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

enum class Letter : std::uint8_t { zero = 0, one = 1 };
inline constexpr std::array<Letter, 2> kLetters{Letter::zero, Letter::one};

inline char to_char(Letter l) { return l == Letter::zero ? '0' : '1'; }

// Words over {0,1} are strings of '0'/'1'. std::string's operator< is exactly
// the lexicographic order used throughout: a proper prefix comes first.
using Word = std::string;

// Partial DFA over {0,1}. States are 0..size()-1.
class Dfa {
 public:
  Dfa() : Dfa(1) {}
  explicit Dfa(std::size_t state_count, StateId initial = 0);

  std::size_t size() const noexcept { return delta_.size(); }
  StateId initial() const noexcept { return initial_; }
  void set_initial(StateId q);

  StateId add_state();

  // kNoState when undefined.
  StateId next(StateId q, Letter l) const { return delta_.at(q)[static_cast<int>(l)]; }
  bool has_next(StateId q, Letter l) const { return next(q, l) != kNoState; }
  std::size_t out_degree(StateId q) const;
  void set_transition(StateId from, Letter l, StateId to);
  void clear_transition(StateId from, Letter l);

  // Follows `w` from `q`; kNoState if the run leaves the automaton.
  StateId run(StateId q, const Word& w) const;

  bool is_final(StateId q) const { return final_.at(q) != 0; }
  void set_final(StateId q, bool final = true);
  std::vector<StateId> finals() const;

  bool operator==(const Dfa&) const = default;

 private:
  std::vector<std::array<StateId, 2>> delta_;
  std::vector<char> final_;
  StateId initial_ = 0;
};

// DFA over a finite linearly ordered alphabet; symbol order is vector order.
class AlphaDfa {
 public:
  AlphaDfa(std::vector<std::string> alphabet, std::size_t state_count, StateId initial = 0);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }
  // Rank of `symbol` in the alphabet, or symbol_count() if absent.
  std::size_t rank_of(const std::string& symbol) const;

  std::size_t size() const noexcept { return delta_.size(); }
  StateId initial() const noexcept { return initial_; }
  void set_initial(StateId q);
  StateId add_state();

  StateId next(StateId q, std::size_t symbol) const { return delta_.at(q).at(symbol); }
  void set_transition(StateId from, std::size_t symbol, StateId to);

  bool is_final(StateId q) const { return final_.at(q) != 0; }
  void set_final(StateId q, bool final = true);

  bool operator==(const AlphaDfa&) const = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::vector<StateId>> delta_;
  std::vector<char> final_;
  StateId initial_ = 0;
};

// View a binary DFA as an AlphaDfa over the symbols "0" < "1".
AlphaDfa as_alpha(const Dfa& a);

// Removes inaccessible and non-co-accessible states and renumbers the rest in
// breadth-first order from the initial state, smaller letters first.
// Throws EmptyLanguageError when nothing is accepted.
Dfa trim(const Dfa& a);
AlphaDfa trim(const AlphaDfa& a);

bool is_trim(const Dfa& a);
bool is_prefix_accepting(const Dfa& a);
bool is_prefix_accepting(const AlphaDfa& a);

// Complete prefix automaton: trim, final states are sinks, every other state
// has both transitions.
bool is_cpa(const Dfa& a);

// Fixed-width big-endian rank coding of the alphabet into {0,1}.
Dfa binarize(const AlphaDfa& a);

// Accepts L·$ where $ is a fresh symbol below every other symbol.
AlphaDfa prefixize(const AlphaDfa& a);

// Contracts unary chains of a trim prefix automaton into a complete prefix
// automaton with an isomorphic lexicographic ordering.
Dfa to_cpa(const Dfa& a);

// trim, then prefixize/binarize as needed, then to_cpa.
Dfa normalize(const Dfa& a);
Dfa normalize(const AlphaDfa& a);

// Well-ordered test for a CPA: no state of a nontrivial SCC keeps its
// 0-successor inside that SCC. Throws PreconditionError on a non-CPA.
bool is_ordinal_automaton(const Dfa& a);

// Scattered test for a CPA: each state of a nontrivial SCC keeps at most one
// letter inside its SCC. Throws PreconditionError on a non-CPA.
bool is_scattered_automaton(const Dfa& a);

// All accepted words of length <= max_len, in lexicographic order.
std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len);
// Same for an AlphaDfa; words are sequences of symbol ranks.
std::vector<std::vector<std::size_t>> enumerate_language(const AlphaDfa& a, std::size_t max_len);

}  // namespace ordaut
