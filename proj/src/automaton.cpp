#include "ordaut/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <type_traits>

#include "ordaut/condensation.hpp"
#include "ordaut/errors.hpp"

namespace ordaut {

Dfa::Dfa(std::size_t state_count, StateId initial)
    : delta_(state_count, {kNoState, kNoState}), final_(state_count, 0), initial_(initial) {
  if (state_count == 0) throw std::invalid_argument("automaton needs at least one state");
  if (state_count >= kNoState) throw std::invalid_argument("too many states");
  if (initial >= state_count) throw std::invalid_argument("initial state out of range");
}

void Dfa::set_initial(StateId q) {
  if (q >= size()) throw std::out_of_range("initial state out of range");
  initial_ = q;
}

StateId Dfa::add_state() {
  delta_.push_back({kNoState, kNoState});
  final_.push_back(0);
  return static_cast<StateId>(delta_.size() - 1);
}

std::size_t Dfa::out_degree(StateId q) const {
  return (has_next(q, Letter::zero) ? 1u : 0u) + (has_next(q, Letter::one) ? 1u : 0u);
}

void Dfa::set_transition(StateId from, Letter l, StateId to) {
  if (to >= size()) throw std::out_of_range("transition target out of range");
  delta_.at(from)[static_cast<int>(l)] = to;
}

void Dfa::clear_transition(StateId from, Letter l) {
  delta_.at(from)[static_cast<int>(l)] = kNoState;
}

StateId Dfa::run(StateId q, const Word& w) const {
  for (char c : w) {
    if (q == kNoState) break;
    if (c != '0' && c != '1') throw std::invalid_argument("words are over {0,1}");
    q = next(q, c == '0' ? Letter::zero : Letter::one);
  }
  return q;
}

void Dfa::set_final(StateId q, bool final) { final_.at(q) = final ? 1 : 0; }

std::vector<StateId> Dfa::finals() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < size(); ++q)
    if (final_[q]) out.push_back(q);
  return out;
}

AlphaDfa::AlphaDfa(std::vector<std::string> alphabet, std::size_t state_count, StateId initial)
    : alphabet_(std::move(alphabet)),
      delta_(state_count, std::vector<StateId>(alphabet_.size(), kNoState)),
      final_(state_count, 0),
      initial_(initial) {
  if (alphabet_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (alphabet_[i] == alphabet_[j])
        throw std::invalid_argument("duplicate alphabet symbol '" + alphabet_[i] + "'");
  if (state_count == 0) throw std::invalid_argument("automaton needs at least one state");
  if (initial >= state_count) throw std::invalid_argument("initial state out of range");
}

std::size_t AlphaDfa::rank_of(const std::string& symbol) const {
  return static_cast<std::size_t>(std::find(alphabet_.begin(), alphabet_.end(), symbol) -
                                  alphabet_.begin());
}

void AlphaDfa::set_initial(StateId q) {
  if (q >= size()) throw std::out_of_range("initial state out of range");
  initial_ = q;
}

StateId AlphaDfa::add_state() {
  delta_.emplace_back(alphabet_.size(), kNoState);
  final_.push_back(0);
  return static_cast<StateId>(delta_.size() - 1);
}

void AlphaDfa::set_transition(StateId from, std::size_t symbol, StateId to) {
  if (to >= size()) throw std::out_of_range("transition target out of range");
  delta_.at(from).at(symbol) = to;
}

void AlphaDfa::set_final(StateId q, bool final) { final_.at(q) = final ? 1 : 0; }

AlphaDfa as_alpha(const Dfa& a) {
  AlphaDfa out({"0", "1"}, a.size(), a.initial());
  for (StateId q = 0; q < a.size(); ++q) {
    out.set_final(q, a.is_final(q));
    for (Letter l : kLetters)
      if (StateId t = a.next(q, l); t != kNoState) out.set_transition(q, static_cast<std::size_t>(l), t);
  }
  return out;
}

namespace {

// Symbol-generic access so Dfa and AlphaDfa share the graph algorithms.
std::size_t symbols(const Dfa&) { return 2; }
std::size_t symbols(const AlphaDfa& a) { return a.symbol_count(); }
StateId step(const Dfa& a, StateId q, std::size_t s) { return a.next(q, static_cast<Letter>(s)); }
StateId step(const AlphaDfa& a, StateId q, std::size_t s) { return a.next(q, s); }

template <class Automaton>
std::vector<char> coaccessible(const Automaton& a) {
  std::vector<std::vector<StateId>> reverse(a.size());
  for (StateId q = 0; q < a.size(); ++q)
    for (std::size_t s = 0; s < symbols(a); ++s)
      if (StateId t = step(a, q, s); t != kNoState) reverse[t].push_back(q);
  std::vector<char> seen(a.size(), 0);
  std::vector<StateId> todo;
  for (StateId q = 0; q < a.size(); ++q)
    if (a.is_final(q)) {
      seen[q] = 1;
      todo.push_back(q);
    }
  while (!todo.empty()) {
    StateId q = todo.back();
    todo.pop_back();
    for (StateId p : reverse[q])
      if (!seen[p]) {
        seen[p] = 1;
        todo.push_back(p);
      }
  }
  return seen;
}

// Breadth-first numbering from the initial state restricted to `allowed`.
template <class Automaton>
std::vector<StateId> bfs_numbering(const Automaton& a, const std::vector<char>& allowed,
                                   std::vector<StateId>& order) {
  std::vector<StateId> id(a.size(), kNoState);
  order.clear();
  id[a.initial()] = 0;
  order.push_back(a.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    StateId q = order[head];
    for (std::size_t s = 0; s < symbols(a); ++s) {
      StateId t = step(a, q, s);
      if (t == kNoState || !allowed[t] || id[t] != kNoState) continue;
      id[t] = static_cast<StateId>(order.size());
      order.push_back(t);
    }
  }
  return id;
}

template <class Automaton, class Make>
Automaton trim_impl(const Automaton& a, Make make) {
  auto co = coaccessible(a);
  if (!co[a.initial()]) throw EmptyLanguageError();
  std::vector<StateId> order;
  auto id = bfs_numbering(a, co, order);
  Automaton out = make(order.size());
  for (StateId q : order) {
    out.set_final(id[q], a.is_final(q));
    for (std::size_t s = 0; s < symbols(a); ++s) {
      StateId t = step(a, q, s);
      if (t != kNoState && id[t] != kNoState) {
        if constexpr (std::is_same_v<Automaton, Dfa>)
          out.set_transition(id[q], static_cast<Letter>(s), id[t]);
        else
          out.set_transition(id[q], s, id[t]);
      }
    }
  }
  return out;
}

template <class Automaton>
bool prefix_accepting_impl(const Automaton& a) {
  for (StateId q = 0; q < a.size(); ++q) {
    if (!a.is_final(q)) continue;
    for (std::size_t s = 0; s < symbols(a); ++s)
      if (step(a, q, s) != kNoState) return false;
  }
  return true;
}

}  // namespace

Dfa trim(const Dfa& a) {
  return trim_impl(a, [](std::size_t n) { return Dfa(n); });
}

AlphaDfa trim(const AlphaDfa& a) {
  return trim_impl(a, [&](std::size_t n) { return AlphaDfa(a.alphabet(), n); });
}

bool is_trim(const Dfa& a) {
  auto co = coaccessible(a);
  if (std::find(co.begin(), co.end(), 0) != co.end()) return false;
  std::vector<StateId> order;
  bfs_numbering(a, co, order);
  return order.size() == a.size();
}

bool is_prefix_accepting(const Dfa& a) { return prefix_accepting_impl(a); }
bool is_prefix_accepting(const AlphaDfa& a) { return prefix_accepting_impl(a); }

bool is_cpa(const Dfa& a) {
  for (StateId q = 0; q < a.size(); ++q) {
    std::size_t deg = a.out_degree(q);
    if (a.is_final(q) ? deg != 0 : deg != 2) return false;
  }
  return is_trim(a);
}

Dfa binarize(const AlphaDfa& a) {
  const std::size_t sigma = a.symbol_count();
  std::size_t width = 1;
  while ((std::size_t{1} << width) < sigma) ++width;

  Dfa out(a.size(), a.initial());
  for (StateId q = 0; q < a.size(); ++q) out.set_final(q, a.is_final(q));
  for (StateId q = 0; q < a.size(); ++q) {
    for (std::size_t r = 0; r < sigma; ++r) {
      StateId target = a.next(q, r);
      if (target == kNoState) continue;
      // Walk the code of r from q, sharing intermediate states between symbols
      // with a common code prefix.
      StateId node = q;
      for (std::size_t bit = width; bit-- > 1;) {
        Letter l = ((r >> bit) & 1) ? Letter::one : Letter::zero;
        StateId t = out.next(node, l);
        if (t == kNoState) {
          t = out.add_state();
          out.set_transition(node, l, t);
        }
        node = t;
      }
      out.set_transition(node, (r & 1) ? Letter::one : Letter::zero, target);
    }
  }
  return out;
}

AlphaDfa prefixize(const AlphaDfa& a) {
  std::string fresh = "$";
  while (a.rank_of(fresh) != a.symbol_count()) fresh += '$';
  std::vector<std::string> alphabet{fresh};
  alphabet.insert(alphabet.end(), a.alphabet().begin(), a.alphabet().end());

  const StateId sink = static_cast<StateId>(a.size());
  AlphaDfa out(std::move(alphabet), a.size() + 1, a.initial());
  out.set_final(sink);
  for (StateId q = 0; q < a.size(); ++q) {
    for (std::size_t r = 0; r < a.symbol_count(); ++r)
      if (StateId t = a.next(q, r); t != kNoState) out.set_transition(q, r + 1, t);
    if (a.is_final(q)) out.set_transition(q, 0, sink);
  }
  return out;
}

Dfa to_cpa(const Dfa& a) {
  if (!is_trim(a)) throw PreconditionError("to_cpa expects a trim automaton");
  if (!is_prefix_accepting(a)) throw PreconditionError("to_cpa expects a prefix language");

  Dfa out(a.size(), a.initial());
  for (StateId q = 0; q < a.size(); ++q) {
    if (a.is_final(q)) {
      out.set_final(q);
      continue;
    }
    // Follow the unary chain q = q1, q2, ..., qk.
    StateId end = q;
    for (std::size_t steps = 0; !a.is_final(end) && a.out_degree(end) == 1; ++steps) {
      if (steps > a.size()) throw PreconditionError("unary cycle in a trim automaton");
      end = a.has_next(end, Letter::zero) ? a.next(end, Letter::zero) : a.next(end, Letter::one);
    }
    if (a.is_final(end)) {
      out.set_final(q);
    } else {
      for (Letter l : kLetters) out.set_transition(q, l, a.next(end, l));
    }
  }
  return trim(out);
}

Dfa normalize(const Dfa& a) {
  Dfa t = trim(a);
  if (is_prefix_accepting(t)) return to_cpa(t);
  return normalize(as_alpha(t));
}

Dfa normalize(const AlphaDfa& a) {
  AlphaDfa t = trim(a);
  if (!is_prefix_accepting(t)) t = prefixize(t);
  return to_cpa(trim(binarize(t)));
}

namespace {

void require_cpa(const Dfa& a) {
  if (!is_cpa(a)) throw PreconditionError("expected a complete prefix automaton");
}

}  // namespace

bool is_ordinal_automaton(const Dfa& a) {
  require_cpa(a);
  Condensation c = condense(a);
  for (StateId q = 0; q < a.size(); ++q) {
    if (!c.of(q).nontrivial) continue;
    if (c.component_of[a.next(q, Letter::zero)] == c.component_of[q]) return false;
  }
  return true;
}

bool is_scattered_automaton(const Dfa& a) {
  require_cpa(a);
  Condensation c = condense(a);
  for (StateId q = 0; q < a.size(); ++q) {
    if (!c.of(q).nontrivial) continue;
    std::size_t inside = 0;
    for (Letter l : kLetters)
      if (c.component_of[a.next(q, l)] == c.component_of[q]) ++inside;
    if (inside > 1) return false;
  }
  return true;
}

namespace {

template <class Automaton, class WordT, class Push>
void enumerate_from(const Automaton& a, StateId q, WordT& word, std::size_t max_len,
                    std::vector<WordT>& out, Push push) {
  if (a.is_final(q)) out.push_back(word);
  if (word.size() == max_len) return;
  for (std::size_t s = 0; s < symbols(a); ++s) {
    StateId t = step(a, q, s);
    if (t == kNoState) continue;
    push(word, s);
    enumerate_from(a, t, word, max_len, out, push);
    word.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len) {
  std::vector<Word> out;
  Word w;
  enumerate_from(a, a.initial(), w, max_len, out,
                 [](Word& word, std::size_t s) { word.push_back(s == 0 ? '0' : '1'); });
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_language(const AlphaDfa& a, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> w;
  enumerate_from(a, a.initial(), w, max_len, out,
                 [](std::vector<std::size_t>& word, std::size_t s) { word.push_back(s); });
  return out;
}

}  // namespace ordaut
