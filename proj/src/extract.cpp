#include "ordaut/extract.hpp"

#include <stdexcept>

#include "ordaut/condensation.hpp"
#include "ordaut/counting.hpp"
#include "ordaut/errors.hpp"

namespace ordaut {

namespace {

void require_oa(const Dfa& a) {
  if (!is_cpa(a) || !is_ordinal_automaton(a))
    throw PreconditionError("expected an ordinal automaton");
}

}  // namespace

Extraction ordinal_of(const Dfa& a) {
  require_oa(a);
  Condensation c = condense(a);
  Extraction result;

  const std::size_t start = c.component_of[a.initial()];
  if (c.is_key(start)) {
    const Component& comp = c.components[start];
    result.ordinal = comp.nontrivial ? Cnf::omega_power(comp.height) : Cnf::finite(1);
    result.trace.initial_in_key_component = true;
    return result;
  }

  DagAutomaton d = build_dag_view(a, c);

  // Buckets by degree: nontrivial components by height, final singletons at 0.
  std::vector<std::vector<std::size_t>> buckets(c.max_height + 1);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const Component& comp = c.components[i];
    if (comp.nontrivial)
      buckets[comp.height].push_back(i);
    else if (comp.final_singleton)
      buckets[0].push_back(i);
  }

  std::vector<Term> terms;
  std::optional<Word> threshold;
  // Counts only change when the threshold does, which happens at most once per
  // nonzero term.
  std::vector<Natural> above = count_words_above(d, threshold);
  for (std::size_t degree = c.max_height + 1; degree-- > 0;) {
    DegreeStep step;
    step.degree = degree;
    std::optional<Word> next_threshold = threshold;
    for (std::size_t comp : buckets[degree]) {
      ComponentCount cc;
      cc.component = comp;
      cc.count = above[d.sink_of[comp]];
      if (cc.count > 0) {
        cc.witness = lex_greatest_word_to(d, d.sink_of[comp]);
        if (!next_threshold || *next_threshold < *cc.witness) next_threshold = cc.witness;
      }
      step.total += cc.count;
      step.bucket.push_back(std::move(cc));
    }
    step.threshold = next_threshold;
    if (step.total > 0) terms.push_back(Term{degree, step.total});
    if (next_threshold != threshold) {
      threshold = next_threshold;
      if (degree > 0) above = count_words_above(d, threshold);
    }
    result.trace.steps.push_back(std::move(step));
  }
  result.ordinal = Cnf(std::move(terms));
  return result;
}

std::vector<Cnf> state_ordinals(const Dfa& a) {
  require_oa(a);
  Condensation c = condense(a);
  std::vector<Cnf> value(a.size());

  for (std::size_t i = c.components.size(); i-- > 0;) {
    const Component& comp = c.components[i];
    if (!comp.nontrivial) {
      StateId q = comp.members.front();
      value[q] = a.is_final(q) ? Cnf::finite(1)
                               : value[a.next(q, Letter::zero)] + value[a.next(q, Letter::one)];
      continue;
    }
    // The component is one cycle of 1-transitions with every 0-edge leaving it.
    const StateId first = comp.members.front();
    Cnf inner;
    std::size_t length = 0;
    StateId s = first;
    do {
      StateId exit = a.next(s, Letter::zero);
      if (c.component_of[exit] == i) throw std::logic_error("0-transition stays inside a component");
      inner += value[exit];
      s = a.next(s, Letter::one);
      if (++length > comp.members.size() || c.component_of[s] != i)
        throw std::logic_error("component is not a single 1-cycle");
    } while (s != first);
    if (length != comp.members.size()) throw std::logic_error("component is not a single 1-cycle");

    Cnf o = times_omega(inner);
    if (o != Cnf::omega_power(comp.height))
      throw std::logic_error("component value differs from w^height");
    for (StateId q : comp.members) value[q] = o;
  }
  return value;
}

Cnf ordinal_of_recursive(const Dfa& a) { return state_ordinals(a)[a.initial()]; }

Cnf ordinal_of_enumerative(const Dfa& a, std::size_t word_limit) {
  if (!is_cpa(a)) throw PreconditionError("expected a complete prefix automaton");
  Condensation c = condense(a);
  for (const Component& comp : c.components)
    if (comp.nontrivial) throw PreconditionError("enumeration needs an acyclic automaton");

  // Words are shorter than the state count; count them without materializing.
  std::size_t count = 0;
  std::vector<StateId> todo{a.initial()};
  while (!todo.empty()) {
    StateId q = todo.back();
    todo.pop_back();
    if (a.is_final(q)) {
      if (++count > word_limit) throw PreconditionError("too many words to enumerate");
      continue;
    }
    todo.push_back(a.next(q, Letter::one));
    todo.push_back(a.next(q, Letter::zero));
  }
  return Cnf::finite(count);
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  return ordinal_of(a).ordinal == ordinal_of(b).ordinal;
}

}  // namespace ordaut
