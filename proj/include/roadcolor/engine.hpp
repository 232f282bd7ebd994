#pragma once

#include <functional>
#include <vector>

#include "roadcolor/automaton.hpp"
#include "roadcolor/ops.hpp"
#include "roadcolor/stable_pair_search.hpp"

namespace roadcolor {

struct EngineReport {
  explicit EngineReport(Automaton a) : automaton(std::move(a)) {}

  Automaton automaton;
  std::size_t iterations = 0;
  std::size_t flips = 0;
  OpCounter ops;               // everything
  OpCounter search_ops;        // all stable-pair searches
  OpCounter first_search_ops;  // the search on the full-size automaton
  std::vector<std::size_t> round_sizes;  // automaton size entering each round
  std::size_t peak_aux_words = 0;
  std::size_t max_calls_per_root = 0;
  bool reached_terminal = false;
};

/// Observes every search result, e.g. to certify the pairs independently.
using RoundHook = std::function<void(const SearchResult&)>;

/// Synchronizing coloring of an aperiodic strongly connected graph.
/// Throws NotIrreducible, NotAperiodic.
EngineReport find_coloring(const Digraph& g, const RoundHook& hook = {});

/// Coloring whose minimal rank equals the period. Throws NotIrreducible.
EngineReport periodic_find_coloring(const Digraph& g, const RoundHook& hook = {});

}  // namespace roadcolor
