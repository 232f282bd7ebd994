#pragma once

#include <vector>

#include "roadcolor/automaton.hpp"
#include "roadcolor/generator.hpp"

namespace roadcolor::test {

inline Automaton colored(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& rows) {
  return Automaton::from_transitions(n, k, rows);
}

inline Digraph fig1_graph() { return Digraph(4, 2, {{1, 0}, {3, 1}, {0, 2}, {2, 3}}); }
inline Automaton fig1_left() { return colored(4, 2, {{1, 0}, {3, 1}, {0, 2}, {2, 3}}); }
inline Automaton fig1_right() { return colored(4, 2, {{1, 0}, {3, 1}, {2, 0}, {2, 3}}); }

/// One red cycle 0 -> 1 -> ... -> d-1 -> 0 where every state is a bunch.
inline Automaton bunched_cycle(std::size_t d, std::size_t k) {
  std::vector<std::vector<State>> rows(d);
  for (State p = 0; p < d; ++p) rows[p].assign(k, static_cast<State>((p + 1) % d));
  return colored(d, k, rows);
}

/// Random strongly connected graph with arbitrary period.
inline Digraph random_irreducible(Rng& rng, std::size_t n, std::size_t k) {
  for (;;) {
    std::vector<std::vector<State>> adj(n, std::vector<State>(k));
    for (auto& row : adj)
      for (State& x : row) x = rng.below(static_cast<std::uint32_t>(n));
    Digraph g(n, k, adj);
    if (is_strongly_connected(g)) return g;
  }
}

/// Random relabeling of g.
inline Automaton random_coloring(Rng& rng, const Digraph& g) {
  std::vector<std::vector<State>> rows = g.rows();
  for (auto& row : rows)
    for (std::size_t i = row.size(); i > 1; --i) std::swap(row[i - 1], row[rng.below(static_cast<std::uint32_t>(i))]);
  return Automaton::from_transitions(g.size(), g.degree(), rows);
}

}  // namespace roadcolor::test
