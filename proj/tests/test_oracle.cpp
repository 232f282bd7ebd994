#include <doctest.h>

#include "helpers.hpp"
#include "roadcolor/engine.hpp"
#include "roadcolor/error.hpp"
#include "roadcolor/oracle.hpp"

using namespace roadcolor;
using namespace roadcolor::test;

namespace {

bool resets(const Automaton& a, const Word& w) {
  for (State p = 1; p < a.size(); ++p)
    if (a.run(p, w) != a.run(0, w)) return false;
  return true;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("synchronizable pairs") {
    CHECK(oracle::synchronizable_pairs(fig1_right()).off_diagonal_count() == 6);
    CHECK(oracle::synchronizable_pairs(fig1_left()).off_diagonal_count() == 0);
    const oracle::PairSet cycle = oracle::synchronizable_pairs(bunched_cycle(3, 2));
    CHECK(cycle.off_diagonal_count() == 0);
    for (State p = 0; p < 3; ++p) CHECK(cycle.contains(p, p));
  }

  TEST_CASE("synchronized") {
    CHECK(oracle::is_synchronized(fig1_right()));
    CHECK_FALSE(oracle::is_synchronized(fig1_left()));
    CHECK(oracle::is_synchronized(colored(1, 2, {{0, 0}})));
  }

  TEST_CASE("shortest reset word") {
    const auto w = oracle::shortest_sync_word(fig1_right());
    REQUIRE(w);
    CHECK(w->size() == 3);
    CHECK(resets(fig1_right(), *w));
    CHECK(resets(fig1_right(), Word{0, 0, 0}));
    CHECK(oracle::shortest_sync_word(colored(1, 1, {{0}}))->empty());
    CHECK_FALSE(oracle::shortest_sync_word(fig1_left()));
    try {
      oracle::shortest_sync_word(bunched_cycle(17, 1));
      FAIL("17 states accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TooLarge);
    }
  }

  TEST_CASE("reset words replay on engine outputs") {
    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 2 + rng.below(11);
      const Automaton a = find_coloring(gen_random({n, 2 + rng.below(2), rng.next(), 1, Family::Random})).automaton;
      const auto shortest = oracle::shortest_sync_word(a);
      const auto greedy = oracle::greedy_sync_word(a);
      REQUIRE(shortest);
      REQUIRE(greedy);
      CHECK(resets(a, *shortest));
      CHECK(resets(a, *greedy));
      CHECK(shortest->size() <= greedy->size());
    }
    const Automaton big = find_coloring(gen_random({300, 2, 5, 1, Family::CycleTrees})).automaton;
    const auto w = oracle::greedy_sync_word(big);
    REQUIRE(w);
    CHECK(resets(big, *w));
    CHECK_FALSE(oracle::greedy_sync_word(fig1_left()));
  }

  TEST_CASE("stability") {
    for (State p = 0; p < 4; ++p) CHECK(oracle::is_stable(fig1_left(), p, p));
    for (State p = 0; p < 4; ++p)
      for (State q = 0; q < 4; ++q) CHECK(oracle::is_stable(fig1_right(), p, q));
    CHECK_FALSE(oracle::is_stable(fig1_left(), 0, 1));
    CHECK_THROWS_AS(oracle::is_stable(fig1_left(), 0, 4), Error);
  }

  TEST_CASE("minimal rank") {
    CHECK(oracle::minimal_rank(fig1_right()) == 1);
    CHECK(oracle::minimal_rank(fig1_left()) == 4);
    for (std::size_t d = 1; d <= 5; ++d) CHECK(oracle::minimal_rank(bunched_cycle(d, 2)) == d);
    CHECK_THROWS_AS(oracle::minimal_rank(bunched_cycle(13, 1)), Error);
  }

  TEST_CASE("enumeration") {
    std::size_t total = 0, sync = 0;
    oracle::enumerate_colorings(fig1_graph(), [&](const Automaton& a) {
      ++total;
      sync += oracle::is_synchronized(a);
      CHECK(is_equivalent(a, fig1_graph()));
      return true;
    });
    CHECK(total == 16);
    CHECK(sync == 12);
    CHECK(oracle::count_colorings(fig1_graph()) == 16);
    // parallel edges give fewer distinct labelings
    CHECK(oracle::count_colorings(Digraph(2, 2, {{1, 1}, {0, 1}})) == 2);

    std::size_t seen = 0;
    oracle::enumerate_colorings(fig1_graph(), [&](const Automaton&) { return ++seen < 3; });
    CHECK(seen == 3);

    CHECK_THROWS_AS(oracle::enumerate_colorings(gen_random({30, 3, 1, 1, Family::Random}),
                                                [](const Automaton&) { return true; }),
                    Error);
  }

  TEST_CASE("brute force period") {
    CHECK(oracle::brute_force_period(fig1_graph()) == 1);
    CHECK(oracle::brute_force_period(bunched_cycle(4, 2).as_digraph()) == 4);
  }
}
