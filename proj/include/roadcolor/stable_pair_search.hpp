#pragma once

#include <string>
#include <vector>

#include "roadcolor/automaton.hpp"
#include "roadcolor/ops.hpp"
#include "roadcolor/red_forest.hpp"

namespace roadcolor {

struct BEdge {
  State from = kNone;
  Letter letter = 0;
  State to = kNone;
  friend bool operator==(const BEdge&, const BEdge&) = default;
};

/// One decision of the search. Flips exchange letter 0 and `letter` at `state`.
struct TraceEntry {
  std::string rule;
  State state = kNone;
  Letter letter = 0;
  bool flip = false;
};

enum class Outcome { FoundPair, Deferred, Continue, PeriodicTerminal };

const char* outcome_name(Outcome o) noexcept;

struct SearchResult {
  Outcome kind;
  Automaton automaton;
  StablePair pair{};
  BEdge edge{};
  std::vector<TraceEntry> trace;

  bool has_rule(const std::string& rule) const;
  std::size_t flip_count() const;
};

struct SearchStats {
  OpCounter ops;
  std::size_t max_calls_per_root = 0;
  std::size_t aux_words = 0;
};

SearchResult flip_edges_level_zero(Automaton a);

struct Witness {
  State t;
  BEdge edge;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Topmost non-root ancestors (a maximal state counts as its own ancestor) of maximal states
/// in the tree rooted at r that send a b-edge to one of them, ascending.
std::vector<Witness> exploration(const Automaton& a, const RedForest& f, State r);

/// Returns Continue with Condition (**) established, or FoundPair.
SearchResult scan_trees(Automaton a);

/// One root of the main treatment. Requires Condition (**) and r a maximal root.
SearchResult flip_edges(Automaton a, State r);

/// Throws TooSmall, NotIrreducible, CaseAnalysisExhausted.
SearchResult find_stable_pair(Automaton a, SearchStats* stats = nullptr);

}  // namespace roadcolor
