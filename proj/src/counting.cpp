#include "ordaut/counting.hpp"

#include "ordaut/errors.hpp"

namespace ordaut {

DagAutomaton build_dag_view(const Dfa& a, const Condensation& c) {
  if (!is_ordinal_automaton(a)) throw PreconditionError("expected an ordinal automaton");
  if (c.is_key(c.component_of[a.initial()]))
    throw PreconditionError("initial state belongs to a nontrivial component or is final");

  DagAutomaton d{Dfa(1), {}, {}, std::vector<StateId>(a.size(), kNoState)};
  d.sink_of.assign(c.components.size(), kNoState);

  // Trivial states first, in component (topological) order, then one fresh sink
  // per nontrivial component. Edges only go to larger ids.
  for (std::size_t i : c.topological_order) {
    const Component& comp = c.components[i];
    if (comp.nontrivial) continue;
    StateId q = comp.members.front();
    d.view_of[q] = static_cast<StateId>(d.origin.size());
    d.origin.push_back(q);
    if (comp.final_singleton) d.sink_of[i] = d.view_of[q];
  }
  for (std::size_t i : c.topological_order) {
    if (!c.components[i].nontrivial) continue;
    d.sink_of[i] = static_cast<StateId>(d.origin.size());
    d.origin.push_back(kNoState);
  }

  d.graph = Dfa(d.origin.size(), d.view_of[a.initial()]);
  for (StateId v = 0; v < d.origin.size(); ++v) {
    StateId q = d.origin[v];
    if (q == kNoState || a.is_final(q)) {
      d.graph.set_final(v);
      continue;
    }
    for (Letter l : kLetters) {
      StateId t = a.next(q, l);
      std::size_t ct = c.component_of[t];
      d.graph.set_transition(v, l, c.components[ct].nontrivial ? d.sink_of[ct] : d.view_of[t]);
    }
  }
  return d;
}

std::vector<Natural> count_words_above(const DagAutomaton& d, const std::optional<Word>& threshold) {
  const Dfa& g = d.graph;
  std::vector<Natural> weight(g.size());
  if (!threshold) {
    weight[g.initial()] = 1;
  } else {
    // A word v > u diverges from u at some position l with u_l = 0, v_l = 1.
    // Seed the 1-successor of every such divergence point.
    const Word& u = *threshold;
    if (u.size() >= g.size()) throw PreconditionError("threshold longer than any accepted word");
    StateId s = g.initial();
    for (char ch : u) {
      if (ch != '0' && ch != '1') throw PreconditionError("threshold must be a word over {0,1}");
      if (ch == '0' && g.has_next(s, Letter::one)) weight[g.next(s, Letter::one)] += 1;
      s = g.next(s, ch == '0' ? Letter::zero : Letter::one);
      if (s == kNoState) throw PreconditionError("threshold does not lead to a sink");
    }
    if (!d.is_sink(s)) throw PreconditionError("threshold does not lead to a sink");
  }
  // Ids are topological, so one forward sweep propagates every path count.
  for (StateId q = 0; q < g.size(); ++q) {
    if (weight[q] == 0) continue;
    for (Letter l : kLetters)
      if (StateId t = g.next(q, l); t != kNoState) weight[t] += weight[q];
  }
  return weight;
}

Natural count_accepted_greater(const DagAutomaton& d, std::span<const StateId> targets,
                               const std::optional<Word>& threshold) {
  for (StateId t : targets)
    if (t >= d.size() || !d.is_sink(t)) throw PreconditionError("count target is not a sink");
  auto weight = count_words_above(d, threshold);
  Natural total = 0;
  std::vector<char> seen(d.size(), 0);
  for (StateId t : targets) {
    if (seen[t]) continue;
    seen[t] = 1;
    total += weight[t];
  }
  return total;
}

Word lex_greatest_word_to(const DagAutomaton& d, StateId q) {
  const Dfa& g = d.graph;
  if (q >= g.size()) throw PreconditionError("no such state");

  // reaches[p]: some (possibly empty) word leads from p to q.
  std::vector<std::vector<StateId>> reverse(g.size());
  for (StateId p = 0; p < g.size(); ++p)
    for (Letter l : kLetters)
      if (StateId t = g.next(p, l); t != kNoState) reverse[t].push_back(p);
  std::vector<char> reaches(g.size(), 0);
  std::vector<StateId> todo{q};
  reaches[q] = 1;
  while (!todo.empty()) {
    StateId p = todo.back();
    todo.pop_back();
    for (StateId r : reverse[p])
      if (!reaches[r]) {
        reaches[r] = 1;
        todo.push_back(r);
      }
  }
  if (!reaches[g.initial()]) throw PreconditionError("state is unreachable from the initial state");

  Word u;
  for (StateId s = g.initial(); s != q;) {
    StateId one = g.next(s, Letter::one);
    if (one != kNoState && reaches[one]) {
      u.push_back('1');
      s = one;
    } else {
      u.push_back('0');
      s = g.next(s, Letter::zero);
    }
  }
  return u;
}

}  // namespace ordaut
