#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "roadcolor/bench.hpp"
#include "roadcolor/document.hpp"
#include "roadcolor/engine.hpp"
#include "roadcolor/fixtures.hpp"
#include "roadcolor/generator.hpp"
#include "roadcolor/oracle.hpp"
#include "roadcolor/red_forest.hpp"

using namespace roadcolor;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

using Check = std::function<Verdict()>;

bool stable_pair(const SearchResult& r) {
  return r.kind != Outcome::FoundPair || oracle::is_stable(r.automaton, r.pair.s, r.pair.t);
}

// Every 2-out multigraph on n states, each listed once up to slot order.
void for_each_two_out(std::size_t n, const std::function<void(const Digraph&)>& visit) {
  std::vector<std::pair<State, State>> choices;
  for (State a = 0; a < n; ++a)
    for (State b = a; b < n; ++b) choices.emplace_back(a, b);
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<std::vector<State>> adj(n);
    for (State p = 0; p < n; ++p) adj[p] = {choices[pick[p]].first, choices[pick[p]].second};
    visit(Digraph(n, 2, adj));
    std::size_t i = 0;
    while (i < n && ++pick[i] == choices.size()) pick[i++] = 0;
    if (i == n) return;
  }
}

Verdict figure_one() {
  const Fixture& graph = fixture("fig1_graph");
  const Automaton& right = fixture("fig1_right").automaton;
  const EngineReport rep = find_coloring(graph.automaton.as_digraph());
  Verdict o;
  o.ok = is_equivalent(rep.automaton, graph.automaton.as_digraph()) && oracle::is_synchronized(rep.automaton);
  const auto w = oracle::shortest_sync_word(right);
  o.ok = o.ok && oracle::is_synchronized(right) && w && w->size() <= 3;
  const Word aaa{0, 0, 0};
  for (State p = 0; p < right.size(); ++p) o.ok = o.ok && right.run(p, aaa) == right.run(0, aaa);
  o.detail = "shortest word length " + std::to_string(w ? w->size() : 0) + ", aaa replayed";
  return o;
}

Verdict exhaustive_small() {
  std::size_t graphs = 0, failures = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_two_out(n, [&](const Digraph& g) {
      if (!is_strongly_connected(g) || period(g) != 1) return;
      ++graphs;
      bool exists = false;
      oracle::enumerate_colorings(g, [&](const Automaton& a) {
        exists = oracle::is_synchronized(a);
        return !exists;
      });
      const EngineReport rep = find_coloring(g);
      if (!exists || !is_equivalent(rep.automaton, g) || !oracle::is_synchronized(rep.automaton)) ++failures;
    });
  }
  return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(failures) + " failures"};
}

Verdict random_suite() {
  Rng rng(2024);
  std::size_t failures = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + rng.below(59), k = 2 + rng.below(3);
    const auto family = static_cast<Family>(rng.below(3));
    const Digraph g = gen_random({n, k, rng.next(), 1, family});
    const EngineReport rep = find_coloring(g);
    if (!is_equivalent(rep.automaton, g) || !oracle::is_synchronized(rep.automaton)) ++failures;
  }
  return {failures == 0, "500 graphs, " + std::to_string(failures) + " failures"};
}

Verdict soundness() {
  std::size_t pairs = 0, bad = 0;
  auto certify = [&](const SearchResult& r) {
    pairs += r.kind == Outcome::FoundPair;
    bad += !stable_pair(r);
  };
  for (std::size_t n = 2; n <= 4; ++n)
    for_each_two_out(n, [&](const Digraph& g) {
      if (!is_strongly_connected(g)) return;
      oracle::enumerate_colorings(g, [&](const Automaton& a) {
        certify(find_stable_pair(a));
        return true;
      });
    });
  Rng rng(4);
  for (int i = 0; i < 20000; ++i) {
    const std::size_t n = 2 + rng.below(11), k = 2 + rng.below(2);
    const auto family = static_cast<Family>(rng.below(3));
    const Digraph g = gen_random({n, k, rng.next(), 1, family});
    std::vector<std::vector<State>> rows = g.rows();
    for (auto& row : rows)
      for (std::size_t j = row.size(); j > 1; --j) std::swap(row[j - 1], row[rng.below(static_cast<std::uint32_t>(j))]);
    certify(find_stable_pair(Automaton::from_transitions(n, k, rows)));
    find_coloring(g, certify);
  }
  for (const Fixture& fx : fixtures()) certify(find_stable_pair(fx.automaton));
  return {bad == 0, std::to_string(pairs) + " pairs certified, " + std::to_string(bad) + " unstable"};
}

Verdict periodic() {
  std::size_t runs = 0, bad = 0;
  for (std::size_t d : {2, 3, 4})
    for (std::size_t n = d; n <= 12; n += d)
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        for (Family family : {Family::Random, Family::BunchedLayers})
          for (std::size_t k : {2, 3}) {
            const Digraph g = gen_random({n, k, seed, d, family});
            const EngineReport rep = periodic_find_coloring(g);
            ++runs;
            if (!is_equivalent(rep.automaton, g) || oracle::minimal_rank(rep.automaton) != d) ++bad;
          }
  return {bad == 0, std::to_string(runs) + " graphs, " + std::to_string(bad) + " with rank != period"};
}

Verdict complexity() {
  const BenchResult r = bench_scaling(Family::Random, {64, 128, 256, 512, 1024, 2048, 4096}, 2, {1, 2, 3, 4, 5});
  std::ostringstream s;
  s.precision(3);
  s << "engine slope " << r.slope << " (<= 2.3), first search slope " << r.search_slope << " (<= 1.2)";
  return {r.slope <= 2.3 && r.search_slope <= 1.2, s.str()};
}

Verdict fixture_coverage() {
  Verdict o;
  std::size_t covered = 0;
  for (const Fixture& fx : fixtures()) {
    if (fx.rules.empty()) continue;
    const SearchResult r = find_stable_pair(fx.automaton);
    bool ok = r.kind == Outcome::FoundPair && satisfies_condition_star(analyze(r.automaton)) &&
              oracle::is_stable(r.automaton, r.pair.s, r.pair.t);
    for (const std::string& rule : fx.rules) ok = ok && r.has_rule(rule);
    if (fx.name == "fig8_left") {
      ok = ok && fx.labels[r.pair.s] == "6" && fx.labels[r.pair.t] == "15";
      o.detail = "fig8 pair (" + fx.labels[r.pair.s] + "," + fx.labels[r.pair.t] + ")";
    }
    covered += ok;
    o.ok = o.ok && ok;
  }
  o.detail = std::to_string(covered) + "/7 drawn instances, " + o.detail;
  return o;
}

Verdict round_trip() {
  std::size_t docs = 0, bad = 0;
  auto check = [&](const Document& d) {
    const std::string text = write_document(d);
    ++docs;
    bad += write_document(read_document(text)) != text;
  };
  for (const Fixture& fx : fixtures()) {
    check(fx.automaton);
    check(fx.automaton.as_digraph());
  }
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const GenSpec spec{1 + rng.below(60), 1 + rng.below(4), rng.next(), 1, Family::CycleTrees};
    const GenSpec s = spec.k == 1 ? GenSpec{1, 1, spec.seed, 1, Family::Random} : spec;
    check(i % 2 ? Document(gen_random(s)) : Document(find_coloring(gen_random(s)).automaton));
  }
  std::size_t unstable = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GenSpec spec{40, 3, seed, 1, Family::Random};
    unstable += write_document(gen_random(spec)) != write_document(gen_random(spec));
    unstable += write_document(find_coloring(gen_random(spec)).automaton) !=
                write_document(find_coloring(gen_random(spec)).automaton);
  }
  return {bad == 0 && unstable == 0, std::to_string(docs) + " documents, " + std::to_string(bad) +
                                          " mismatches, " + std::to_string(unstable) + " unstable reruns"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    Check run;
  };
  const std::vector<Criterion> criteria{
      {"Figure 1 reproduction", 1, figure_one},
      {"road coloring at n <= 4", 300, exhaustive_small},
      {"random property suite", 120, random_suite},
      {"stable-pair soundness", 0, soundness},
      {"periodic extension", 0, periodic},
      {"complexity slopes", 600, complexity},
      {"figure fixture coverage", 0, fixture_coverage},
      {"format round-trip", 0, round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_s > 0 && secs > criteria[i].limit_s) {
      o.ok = false;
      o.detail += ", over the time limit";
    }
    failed += !o.ok;
    std::printf("criterion %zu %s: %s (%s; %.2f s)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].name,
                o.detail.c_str(), secs);
  }
  return failed == 0 ? 0 : 1;
}
