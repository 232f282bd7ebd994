#include <doctest.h>

#include "helpers.hpp"
#include "roadcolor/error.hpp"
#include "roadcolor/oracle.hpp"

using namespace roadcolor;
using namespace roadcolor::test;

TEST_SUITE("core_model") {
  TEST_CASE("digraph construction") {
    const Digraph g = new_digraph(4, 2, {{1, 0}, {3, 1}, {0, 2}, {2, 3}});
    CHECK(g.size() == 4);
    CHECK(g.degree() == 2);
    CHECK(g.out(1)[0] == 3);
    CHECK(g == fig1_graph());

    const Digraph one(1, 1, {{0}});
    CHECK(one.out(0)[0] == 0);

    try {
      Digraph(2, 2, {{1, 1}, {0}});
      FAIL("short row accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Shape);
    }
    CHECK_THROWS_AS(Digraph(2, 1, {{0}}), Error);
    CHECK_THROWS_AS(Digraph(2, 1, {{0}, {2}}), Error);
    CHECK(Digraph::from_flat(2, 1, {1, 0}) == Digraph(2, 1, {{1}, {0}}));
  }

  TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(fig1_graph()));
    CHECK_FALSE(is_strongly_connected(Digraph(2, 1, {{0}, {0}})));
    CHECK(is_strongly_connected(gen_random({200, 2, 11, 1, Family::Random})));
  }

  TEST_CASE("period") {
    CHECK(period(fig1_graph()) == 1);
    CHECK(period(Digraph(3, 2, {{1, 1}, {2, 2}, {0, 0}})) == 3);
    try {
      period(Digraph(2, 1, {{0}, {0}}));
      FAIL("reducible graph accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotIrreducible);
    }
  }

  TEST_CASE("period agrees with simple cycle enumeration") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + rng.below(8), k = 1 + rng.below(2);
      const Digraph g = random_irreducible(rng, n, k);
      CHECK(period(g) == oracle::brute_force_period(g));
    }
    for (std::size_t d : {2, 3, 4}) {
      const Digraph g = gen_random({8 / d * d, 2, d, d, Family::Random});
      CHECK(oracle::brute_force_period(g) == d);
    }
  }

  TEST_CASE("step and run") {
    const Automaton a = fig1_right();
    const Word aaa{0, 0, 0};
    for (State p = 0; p < 4; ++p) CHECK(a.run(p, aaa) == 2);
    for (State p = 0; p < 4; ++p) CHECK(a.run(p, Word{}) == p);
    CHECK(a.step(2, 1) == 0);
  }

  TEST_CASE("flip") {
    const Automaton right = flip(fig1_left(), 2, 0, 1);
    CHECK(right == fig1_right());
    CHECK(flip(right, 2, 0, 1) == fig1_left());
    try {
      flip(right, 1, 1, 1);
      FAIL("same letter accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SameLetter);
    }
  }

  TEST_CASE("equivalence") {
    const Digraph g = fig1_graph();
    CHECK(is_equivalent(fig1_left(), g));
    CHECK(is_equivalent(fig1_right(), g));
    CHECK(is_equivalent(Automaton(g), g));
    CHECK_FALSE(is_equivalent(colored(4, 2, {{1, 0}, {3, 1}, {0, 2}, {2, 2}}), g));
  }

  TEST_CASE("coloring must match the base graph") {
    auto g = std::make_shared<const Digraph>(fig1_graph());
    CHECK_NOTHROW(Automaton(g, {0, 1, 1, 3, 2, 0, 3, 2}));
    CHECK_THROWS_AS(Automaton(g, {0, 1, 1, 3, 2, 0, 3, 3}), Error);
  }

  TEST_CASE("bunches") {
    CHECK_FALSE(is_bunch(fig1_right(), 2));
    const Automaton single = colored(3, 1, {{1}, {2}, {0}});
    for (State p = 0; p < 3; ++p) CHECK(is_bunch(single, p));
    std::vector<std::vector<State>> rows(6, std::vector<State>(3));
    for (State p = 0; p < 6; ++p) rows[p] = {static_cast<State>((p + 1) % 6), p, p};
    rows[2] = {5, 5, 5};
    rows[4] = {5, 4, 3};
    const Automaton a = colored(6, 3, rows);
    CHECK(is_bunch(a, 2));
    CHECK_FALSE(is_bunch(a, 0));
  }
}
