#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "roadcolor/error.hpp"
#include "roadcolor/fixtures.hpp"
#include "roadcolor/oracle.hpp"
#include "roadcolor/stable_pair_search.hpp"

using namespace roadcolor;
using namespace roadcolor::test;

namespace {

bool found_stable(const SearchResult& r) {
  return r.kind == Outcome::FoundPair && oracle::is_stable(r.automaton, r.pair.s, r.pair.t);
}

State unique_maximal_root(const Automaton& a) {
  const RedForest f = analyze(a);
  REQUIRE(satisfies_condition_star(f));
  return f.root[f.maximal_states.front()];
}

// Cycle r=0 -> a=1 -> s0=2 -> 0, branches 4 -> 3 -> 0 and 6 -> 5 -> 0, leaf 7 -> 2.
// The letters 1 and 2 of state 1 reach the maximal states 4 and 6.
Automaton two_branches(bool s1_bunch, bool s2_bunch) {
  return colored(8, 3,
                 {{1, 7, 0},
                  {2, 4, 6},
                  {0, 0, 0},
                  {0, s1_bunch ? 0u : 3u, 0},
                  {3, 0, 0},
                  {0, s2_bunch ? 0u : 5u, 0},
                  {5, 0, 0},
                  {2, 7, 7}});
}

}  // namespace

TEST_SUITE("stable_pair_search") {
  TEST_CASE("level zero flip") {
    // red 0 <-> 1 and 2 <-> 3; b: 0 -> 2, 1 -> 1, 2 -> 0, 3 -> 3
    const Automaton a = colored(4, 2, {{1, 2}, {0, 1}, {3, 0}, {2, 3}});
    const SearchResult r = flip_edges_level_zero(a);
    REQUIRE(r.kind == Outcome::FoundPair);
    CHECK(r.pair == StablePair{0, 3});
    CHECK(r.automaton.step(0, 0) == 2);
    CHECK(r.automaton.step(0, 1) == 1);
    CHECK(r.flip_count() == 1);
    CHECK(oracle::is_stable(r.automaton, 0, 3));
  }

  TEST_CASE("level zero on bunched cycle") {
    const SearchResult r = flip_edges_level_zero(bunched_cycle(5, 2));
    CHECK(r.kind == Outcome::PeriodicTerminal);
    CHECK(r.flip_count() == 0);
    try {
      flip_edges_level_zero(fig1_right());
      FAIL("positive level accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LevelNotZero);
    }
  }

  TEST_CASE("exploration") {
    // 0 is a red loop with the chain 3 -> 2 -> 1 -> 0; 4 -> 0 is a level 1 leaf
    const Automaton clean = colored(5, 2, {{0, 3}, {0, 4}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(exploration(clean, analyze(clean), 0).empty());

    const Automaton one = colored(5, 2, {{0, 3}, {0, 4}, {1, 3}, {2, 0}, {0, 1}});
    CHECK(exploration(one, analyze(one), 0) == std::vector<Witness>{{2, {2, 1, 3}}});

    // 1 and 2 both send b-edges to 3; only the higher one is reported
    const Automaton nested = colored(5, 2, {{0, 4}, {0, 3}, {1, 3}, {2, 0}, {0, 1}});
    CHECK(exploration(nested, analyze(nested), 0) == std::vector<Witness>{{1, {1, 1, 3}}});
  }

  TEST_CASE("scan trees keeps (**)") {
    const Automaton a = colored(5, 2, {{0, 3}, {0, 4}, {1, 0}, {2, 0}, {0, 1}});
    const SearchResult r = scan_trees(a);
    CHECK(r.kind == Outcome::Continue);
    CHECK(r.flip_count() == 0);
    CHECK_THROWS_AS(scan_trees(fig1_left()), Error);
  }

  TEST_CASE("scan trees with two trees") {
    // cycle 0 <-> 1; 4 -> 3 -> 2 -> 0 and 7 -> 6 -> 5 -> 1; leaves 8 -> 0, 9 -> 1
    // 3 -> 4 and 6 -> 7 are internal b-edges into the maximal states
    const Automaton a = colored(10, 2,
                                {{1, 0}, {0, 1}, {0, 2}, {2, 4}, {3, 0},
                                 {1, 5}, {5, 7}, {6, 1}, {0, 8}, {1, 9}});
    const SearchResult r = scan_trees(a);
    CHECK(r.kind == Outcome::FoundPair);
    CHECK(r.flip_count() == 1);
    CHECK(r.has_rule("scan_trees"));
    CHECK(found_stable(r));
  }

  TEST_CASE("case (1)") {
    const Fixture& fx = fixture("fig2_left");
    const State r = fx.state("r");
    const SearchResult res = flip_edges(fx.automaton, r);
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 1);
    CHECK(res.has_rule("case1"));
    CHECK(res.trace.front().state == fx.state("t1"));
    CHECK(unique_maximal_root(res.automaton) == r);
    CHECK(found_stable(res));
  }

  TEST_CASE("case (2), first flip suffices") {
    const Fixture& fx = fixture("fig3_left");
    const SearchResult res = flip_edges(fx.automaton, fx.state("r"));
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 1);
    CHECK(res.trace.front().state == fx.state("t1"));
    CHECK(found_stable(res));
  }

  TEST_CASE("case (2), second flip") {
    const Fixture& fx = fixture("fig4_left");
    const State r = fx.state("r");
    const SearchResult res = flip_edges(fx.automaton, r);
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 2);
    CHECK(res.has_rule("case2_second"));
    CHECK(res.automaton.step(fx.state("t2"), 0) == fx.state("p2"));
    CHECK(unique_maximal_root(res.automaton) == r);
    CHECK(found_stable(res));
  }

  TEST_CASE("single child, s0 bunch") {
    const Fixture& fx = fixture("fig7_left");
    SearchStats stats;
    const SearchResult res = find_stable_pair(fx.automaton, &stats);
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.has_rule("child_bunch"));
    CHECK(res.automaton.step(fx.state("t"), 0) == fx.state("p"));
    CHECK(stats.max_calls_per_root == 2);
    CHECK(found_stable(res));
  }

  TEST_CASE("single child, two bunches") {
    // cycle r=0 -> 1 -> s0=2 -> 0, branch 4 -> s1=3 -> 0, leaf 5 -> 2; 2 and 3 are bunches
    const Automaton a = colored(6, 2, {{1, 5}, {2, 4}, {0, 0}, {0, 0}, {3, 0}, {2, 5}});
    const SearchResult res = find_stable_pair(a);
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 0);
    CHECK(res.has_rule("child_bunches"));
    CHECK(res.pair == StablePair{2, 3});
    CHECK(found_stable(res));
  }

  TEST_CASE("single child deferred") {
    const Fixture& fx = fixture("fig8_left");
    const State r = fx.state("r");
    const SearchResult res = flip_edges(fx.automaton, r);
    REQUIRE(res.kind == Outcome::Deferred);
    CHECK(res.has_rule("child_defer"));
    CHECK(res.edge == BEdge{fx.state("s0"), 1, fx.state("p")});
    const RedForest f = analyze(flip(fx.automaton, res.edge.from, 0, res.edge.letter));
    const auto& roots = f.maximal_roots[f.cluster[r]];
    CHECK(std::find(roots.begin(), roots.end(), r) == roots.end());
  }

  TEST_CASE("children, s0 bunch") {
    const Fixture& fx = fixture("fig5_left");
    const SearchResult res = flip_edges(fx.automaton, fx.state("r"));
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.has_rule("children_bunch"));
    CHECK(res.trace.front().state == fx.state("t"));
    CHECK(found_stable(res));
  }

  TEST_CASE("children, q0 below s1") {
    const Fixture& fx = fixture("fig6_left");
    const State r = fx.state("r");
    const SearchResult res = flip_edges(fx.automaton, r);
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 2);
    CHECK(res.has_rule("children_t2"));
    CHECK(res.has_rule("children_s0"));
    CHECK(res.automaton.step(fx.state("t"), 0) == fx.state("p2"));
    CHECK(res.automaton.step(fx.state("s0"), 0) == fx.state("s1"));
    CHECK(unique_maximal_root(res.automaton) == r);
    CHECK(found_stable(res));
  }

  TEST_CASE("children, two bunches") {
    const SearchResult res = find_stable_pair(two_branches(true, false));
    CHECK(res.kind == Outcome::FoundPair);
    CHECK(res.flip_count() == 0);
    CHECK(res.has_rule("children_bunches"));
    CHECK(res.pair == StablePair{2, 3});
    CHECK(found_stable(res));

    CHECK(found_stable(find_stable_pair(two_branches(false, true))));
    CHECK(found_stable(find_stable_pair(two_branches(false, false))));
  }

  TEST_CASE("find stable pair") {
    const SearchResult left = find_stable_pair(fig1_left());
    CHECK(found_stable(left));
    CHECK(find_stable_pair(bunched_cycle(5, 2)).kind == Outcome::PeriodicTerminal);
    try {
      find_stable_pair(colored(1, 2, {{0, 0}}));
      FAIL("single state accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TooSmall);
    }
    try {
      find_stable_pair(colored(2, 1, {{0}, {0}}));
      FAIL("reducible automaton accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotIrreducible);
    }
  }

  TEST_CASE("final flips on deferred roots") {
    const Fixture& fx = fixture("fig8_left");
    const SearchResult res = find_stable_pair(fx.automaton);
    REQUIRE(res.kind == Outcome::FoundPair);
    CHECK(fx.labels[res.pair.s] == "6");
    CHECK(fx.labels[res.pair.t] == "15");
    CHECK(res.flip_count() == 3);
    CHECK(unique_maximal_root(res.automaton) == fx.state("t"));
    CHECK(found_stable(res));
  }

  TEST_CASE("drawn instances") {
    for (const Fixture& fx : fixtures()) {
      if (fx.rules.empty()) continue;
      CAPTURE(fx.name);
      const SearchResult res = find_stable_pair(fx.automaton);
      for (const std::string& rule : fx.rules) CHECK(res.has_rule(rule));
      CHECK(satisfies_condition_star(analyze(res.automaton)));
      CHECK(found_stable(res));
    }
  }

  TEST_CASE("found pairs are stable on small automata") {
    Rng rng(17);
    for (int i = 0; i < 3000; ++i) {
      const std::size_t n = 2 + rng.below(11), k = 2 + rng.below(2);
      const Automaton a = random_coloring(rng, random_irreducible(rng, n, k));
      SearchStats stats;
      const SearchResult r = find_stable_pair(a, &stats);
      CHECK(stats.max_calls_per_root <= 3);
      CHECK(is_equivalent(r.automaton, a.as_digraph()));
      if (r.kind == Outcome::FoundPair) {
        REQUIRE(found_stable(r));
      } else {
        REQUIRE(r.kind == Outcome::PeriodicTerminal);
        CHECK(period(a.as_digraph()) > 1);
      }
    }
  }
}
