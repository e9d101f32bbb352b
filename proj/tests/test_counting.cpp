#include <doctest.h>

#include <random>

#include "ordaut/counting.hpp"
#include "ordaut/errors.hpp"
#include "ordaut/synthesis.hpp"
#include "support/fixtures.hpp"

using namespace ordaut;
using S = testing::ExampleStates;

namespace {

struct ExampleView {
  Dfa a = testing::example_automaton();
  Condensation c = condense(a);
  DagAutomaton d = build_dag_view(a, c);
  StateId sink(StateId original) const { return d.sink_of[c.component_of[original]]; }
};

}  // namespace

TEST_CASE("dag view of the example automaton") {
  ExampleView v;
  const Dfa& g = v.d.graph;
  const StateId q0 = v.d.view_of[S::q0], q1 = v.d.view_of[S::q1];
  CHECK(g.initial() == q0);
  CHECK(g.next(q0, Letter::zero) == q1);
  CHECK(g.next(q0, Letter::one) == v.sink(S::s1));
  CHECK(g.next(q1, Letter::zero) == v.sink(S::s3));
  CHECK(g.next(q1, Letter::one) == v.sink(S::s3));
  // Every component of K has a sink; sinks have no transitions.
  for (StateId s : {S::s0, S::s1, S::s2, S::s3}) {
    StateId t = v.sink(s);
    REQUIRE(t != kNoState);
    CHECK(v.d.is_sink(t));
    CHECK(g.out_degree(t) == 0);
  }
  CHECK(v.d.view_of[S::s3] == kNoState);
  CHECK(v.d.origin[q1] == S::q1);
}

TEST_CASE("dag view of an acyclic CPA keeps its transition graph") {
  Dfa d5 = finite_block(5);
  DagAutomaton d = build_dag_view(d5, condense(d5));
  REQUIRE(d.size() == d5.size());
  for (StateId q = 0; q < d5.size(); ++q) {
    StateId v = d.view_of[q];
    CHECK(d.graph.is_final(v) == d5.is_final(q));
    for (Letter l : kLetters) {
      StateId t = d5.next(q, l);
      CHECK(d.graph.next(v, l) == (t == kNoState ? kNoState : d.view_of[t]));
    }
  }
}

TEST_CASE("dag view preconditions") {
  Dfa a2 = power_automaton(2);
  CHECK_THROWS_AS(build_dag_view(a2, condense(a2)), PreconditionError);
  Dfa single(1, 0);
  single.set_final(0);
  CHECK_THROWS_AS(build_dag_view(single, condense(single)), PreconditionError);
}

TEST_CASE("count_accepted_greater on the example") {
  ExampleView v;
  const StateId s1 = v.sink(S::s1), s3 = v.sink(S::s3);
  CHECK(count_accepted_greater(v.d, std::vector<StateId>{s3}, std::nullopt) == 2);
  CHECK(count_accepted_greater(v.d, std::vector<StateId>{s1}, Word("01")) == 1);
  CHECK(count_accepted_greater(v.d, std::vector<StateId>{s3}, Word("00")) == 1);
  auto all = v.d.sinks();
  CHECK(count_accepted_greater(v.d, all, std::nullopt) == 3);
  CHECK(count_accepted_greater(v.d, all, Word("1")) == 0);

  CHECK_THROWS_AS(count_accepted_greater(v.d, all, Word("0")), PreconditionError);
  CHECK_THROWS_AS(count_accepted_greater(v.d, all, Word("11")), PreconditionError);
  CHECK_THROWS_AS(count_accepted_greater(v.d, std::vector<StateId>{v.d.view_of[S::q1]}, std::nullopt),
                  PreconditionError);
}

TEST_CASE("summation from the zeroth power counts the branch word itself") {
  // 0 --0--> 1, 0 --1--> 2, {1, 2} final: language {0, 1}, threshold "0".
  Dfa a = testing::from_edges(3, 0, {1, 2}, {{0, 0, 1}, {0, 1, 2}});
  DagAutomaton d = build_dag_view(a, condense(a));
  auto sinks = d.sinks();
  CHECK(count_accepted_greater(d, sinks, Word("0")) == 1);
  std::vector<StateId> targets{1, 2};
  CHECK(testing::count_by_matrices(a, targets, "0", 0) == 1);
  CHECK(testing::count_by_matrices(a, targets, "0", 1) == 0);
}

TEST_CASE("lex_greatest_word_to") {
  ExampleView v;
  CHECK(lex_greatest_word_to(v.d, v.sink(S::s3)) == "01");
  CHECK(lex_greatest_word_to(v.d, v.sink(S::s1)) == "1");
  CHECK(lex_greatest_word_to(v.d, v.d.view_of[S::q0]).empty());
  CHECK_THROWS_AS(lex_greatest_word_to(v.d, v.sink(S::s2)), PreconditionError);

  Dfa d3 = finite_block(3);
  DagAutomaton d = build_dag_view(d3, condense(d3));
  CHECK(lex_greatest_word_to(d, d.sinks().front()) == "1");
}

TEST_CASE("counting agrees with enumeration and the matrix formula") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 150) {
    Dfa a = testing::random_ordinal_automaton(rng, 10, true);
    if (a.size() < 2) continue;
    ++checked;
    DagAutomaton d = build_dag_view(a, condense(a));
    REQUIRE(d.size() == a.size());
    std::vector<StateId> sinks, originals = a.finals();
    for (StateId f : originals) sinks.push_back(d.view_of[f]);

    auto words = enumerate_language(a, a.size());
    CHECK(count_accepted_greater(d, sinks, std::nullopt) == words.size());
    for (const Word& u : words) {
      CHECK(u.size() < a.size());
      std::uint64_t expected = testing::count_by_enumeration(a, originals, u);
      CHECK(count_accepted_greater(d, sinks, u) == expected);
      CHECK(testing::count_by_matrices(a, originals, u, 0) == expected);
      StateId end = a.run(a.initial(), u);
      std::vector<StateId> one{d.view_of[end]};
      CHECK(count_accepted_greater(d, one, u) == testing::count_by_enumeration(a, {end}, u));
    }
    // Greatest word per sink: it reaches the sink and nothing greater does.
    for (StateId f : originals) {
      Word top = lex_greatest_word_to(d, d.view_of[f]);
      CHECK(a.run(a.initial(), top) == f);
      CHECK(testing::count_by_enumeration(a, {f}, top) == 0);
    }
    // Counts never exceed 2^n.
    CHECK(count_accepted_greater(d, sinks, std::nullopt) <= (Natural(1) << a.size()));
  }
}
