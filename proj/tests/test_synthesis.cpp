#include <doctest.h>

#include <random>

#include "ordaut/errors.hpp"
#include "ordaut/extract.hpp"
#include "ordaut/synthesis.hpp"
#include "support/fixtures.hpp"

using namespace ordaut;

namespace {

// g by the closed form floor(log2 m) + popcount(m).
std::size_t g_closed(std::uint64_t m) {
  std::size_t log = 0;
  while ((m >> (log + 1)) != 0) ++log;
  return log + static_cast<std::size_t>(__builtin_popcountll(m));
}

}  // namespace

TEST_CASE("power automaton") {
  Dfa a0 = power_automaton(0);
  CHECK(a0.size() == 1);
  CHECK(a0.is_final(0));
  CHECK(a0.out_degree(0) == 0);
  CHECK(power_automaton(3).size() == 4);
  CHECK(ordinal_of(power_automaton(5)).ordinal == Cnf::omega_power(5));
  CHECK(trim(power_automaton(4)) == power_automaton(4));
}

TEST_CASE("finite blocks") {
  Dfa d1 = finite_block(1);
  CHECK(d1.size() == 1);
  CHECK(d1.is_final(d1.initial()));
  Dfa d4 = finite_block(4);
  CHECK(d4.size() == 3);
  CHECK(enumerate_language(d4, 4) == std::vector<Word>{"00", "01", "10", "11"});
  Dfa d5 = finite_block(5);
  CHECK(d5.size() == 4);
  CHECK(enumerate_language(d5, 4).size() == 5);
  CHECK_THROWS_AS(finite_block(0), PreconditionError);

  for (std::uint64_t m = 1; m <= 300; ++m) {
    Dfa d = finite_block(m);
    CHECK(d.size() == finite_block_size(m));
    CHECK(d.finals().size() == 1);
    CHECK(is_cpa(d));
    CHECK(enumerate_language(d, d.size()).size() == m);
  }
}

TEST_CASE("finite block sizes") {
  CHECK(finite_block_size(1) == 1);
  CHECK(finite_block_size(8) == 4);
  CHECK(finite_block_size(7) == 5);
  for (std::uint64_t m = 1; m < 5000; ++m) CHECK(finite_block_size(m) == g_closed(m));
  const std::uint64_t big = (std::uint64_t{1} << 40) + 12345;
  CHECK(finite_block_size(big) == g_closed(big));
  CHECK(finite_block(big).size() == g_closed(big));
  CHECK_THROWS_AS(finite_block_size(0), PreconditionError);
}

TEST_CASE("ordered sum") {
  Dfa d1 = finite_block(1), d2 = finite_block(2);
  CHECK(ordered_sum(std::vector<Dfa>{d1}) == d1);

  Dfa two = ordered_sum(std::vector<Dfa>{d1, d1});
  CHECK(two.size() == 3);
  CHECK(is_cpa(two));
  CHECK(enumerate_language(two, 3) == std::vector<Word>{"0", "1"});

  // D2's words come first and end in D2's final state (id 1 + 1 = 2 after glue).
  Dfa three = ordered_sum(std::vector<Dfa>{d2, d1});
  auto words = enumerate_language(three, 4);
  REQUIRE(words == std::vector<Word>{"00", "01", "1"});
  const StateId d2_final = 1 + d2.finals().front();
  CHECK(three.run(three.initial(), "00") == d2_final);
  CHECK(three.run(three.initial(), "01") == d2_final);
  CHECK(three.run(three.initial(), "1") != d2_final);

  CHECK_THROWS_AS(ordered_sum(std::vector<Dfa>{}), PreconditionError);
}

TEST_CASE("synthesize") {
  for (std::size_t n = 0; n < 6; ++n) CHECK(synthesize(Cnf::omega_power(n)) == power_automaton(n));
  Dfa ex = synthesize(Cnf::parse("w^3*2 + w"));
  CHECK(ex.size() == 6);
  CHECK(is_ordinal_automaton(ex));
  CHECK(to_string(ordinal_of(ex).ordinal) == "w^3*2 + w");
  Dfa five = synthesize(Cnf::finite(5));
  CHECK(five.size() == 4);
  CHECK(ordinal_of(five).ordinal == Cnf::finite(5));
  CHECK_THROWS_AS(synthesize(Cnf{}), PreconditionError);
}

TEST_CASE("synthesis size bound") {
  CHECK(synthesis_size_bound(Cnf::parse("w^3*2 + w")) == 6);
  for (std::size_t n = 0; n < 10; ++n) CHECK(synthesis_size_bound(Cnf::omega_power(n)) == n + 1);
  CHECK(synthesis_size_bound(Cnf::finite(7)) == 5);
  CHECK_THROWS_AS(synthesis_size_bound(Cnf{}), PreconditionError);
}

TEST_CASE("synthesis round trip") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    Cnf alpha = testing::random_cnf(rng, 5, 40);
    Dfa a = synthesize(alpha);
    CHECK(is_ordinal_automaton(a));
    CHECK(a.size() == synthesis_size_bound(alpha));
    CHECK(ordinal_of(a).ordinal == alpha);
    CHECK(ordinal_of_recursive(a) == alpha);
  }
}
