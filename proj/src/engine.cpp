#include "roadcolor/engine.hpp"

#include <algorithm>

#include "roadcolor/congruence.hpp"
#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

EngineReport run(const Digraph& g, bool periodic, const RoundHook& hook) {
  if (!is_strongly_connected(g)) throw Error(Errc::NotIrreducible, "graph is not strongly connected");
  if (!periodic && period(g) != 1) throw Error(Errc::NotAperiodic, "graph has period " + std::to_string(period(g)));

  const std::size_t n = g.size(), k = g.degree();
  EngineReport rep(Automaton{g});
  QuotientMap to_current;
  to_current.class_of.resize(n);
  for (State p = 0; p < n; ++p) to_current.class_of[p] = p;
  to_current.section = to_current.class_of;
  Automaton current = rep.automaton;

  while (current.size() >= 2) {
    rep.round_sizes.push_back(current.size());
    SearchStats stats;
    SearchResult res = find_stable_pair(std::move(current), &stats);
    if (rep.iterations == 0) rep.first_search_ops = stats.ops;
    rep.search_ops += stats.ops;
    rep.ops += stats.ops;
    rep.flips += res.flip_count();
    rep.max_calls_per_root = std::max(rep.max_calls_per_root, stats.max_calls_per_root);
    if (hook) hook(res);

    rep.automaton = lift_coloring(rep.automaton, to_current, res.automaton, &rep.ops);
    if (res.kind == Outcome::PeriodicTerminal) {
      if (!periodic) throw Error(Errc::NotAperiodic, "search reached a bunched cycle");
      rep.reached_terminal = true;
      break;
    }
    if (res.kind != Outcome::FoundPair) throw Error(Errc::CaseAnalysisExhausted, "search ended without a pair");

    Congruence c(res.automaton.size());
    merge_into(res.automaton, c, res.pair.s, res.pair.t, &rep.ops);
    Quotient q = quotient(res.automaton, c, &rep.ops);
    for (State p = 0; p < n; ++p) to_current.class_of[p] = q.map.class_of[to_current.class_of[p]];
    for (State x = 0; x < q.map.section.size(); ++x) q.map.section[x] = to_current.section[q.map.section[x]];
    to_current.section = std::move(q.map.section);
    rep.ops.visits += n;

    const std::size_t words = stats.aux_words + 2 * n + 2 * res.automaton.size() + q.automaton.size() * k;
    rep.peak_aux_words = std::max(rep.peak_aux_words, words);
    current = std::move(q.automaton);
    ++rep.iterations;
  }
  return rep;
}

}  // namespace

EngineReport find_coloring(const Digraph& g, const RoundHook& hook) { return run(g, false, hook); }

EngineReport periodic_find_coloring(const Digraph& g, const RoundHook& hook) { return run(g, true, hook); }

}  // namespace roadcolor
