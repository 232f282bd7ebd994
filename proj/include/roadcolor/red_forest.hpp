#pragma once

#include <cstdint>
#include <vector>

#include "roadcolor/automaton.hpp"
#include "roadcolor/ops.hpp"

namespace roadcolor {

/// Cluster/cycle/tree decomposition of the letter-0 functional graph.
struct RedForest {
  std::vector<State> red_succ;
  std::vector<std::uint32_t> cluster;
  std::vector<char> on_cycle;
  std::vector<std::uint32_t> num;       // position on the cycle, kNone off-cycle
  std::vector<State> cycle_prev;        // red predecessor on the cycle, kNone off-cycle
  std::vector<State> root;
  std::vector<State> top;               // child of the root above p; p itself at level 1, kNone on cycles
  std::vector<std::uint32_t> level;
  std::vector<std::uint32_t> height;    // height of the subtree hanging below p
  std::vector<std::uint32_t> tin, tout; // Euler interval inside p's tree

  // red predecessors that are not cycle states, as CSR
  std::vector<std::uint32_t> child_offset;
  std::vector<State> children;

  std::vector<std::uint32_t> cycle_length;  // per cluster
  std::vector<State> cycle_start;           // per cluster, the state with num 0

  std::uint32_t max_level = 0;
  std::vector<State> maximal_states;               // ascending
  std::vector<std::vector<State>> maximal_roots;   // per cluster, ascending num

  std::size_t size() const noexcept { return red_succ.size(); }
  std::size_t cluster_count() const noexcept { return cycle_length.size(); }

  std::span<const State> children_of(State p) const noexcept {
    return {children.data() + child_offset[p], child_offset[p + 1] - child_offset[p]};
  }

  /// u is an ancestor of v or equal to it (same tree).
  bool is_ancestor_or_self(State u, State v) const noexcept {
    return root[u] == root[v] && tin[u] <= tin[v] && tout[v] <= tout[u];
  }
};

RedForest analyze(const Automaton& a, OpCounter* ops = nullptr);

/// max over cycle states x strictly between t and r of height[x] + dist(x, r); with t == r the
/// whole cycle except r is scanned. Throws NotOnSameCycle.
std::uint32_t segment_height(const RedForest& f, const Automaton& a, State t, State r);

/// x lies on the red walk from `from` (inclusive) to `to_excl` (exclusive). from == to_excl
/// denotes the whole cycle. Throws NotOnSameCycle.
bool cyclic_interval_contains(const RedForest& f, State x, State from, State to_excl);

/// Number of maximal states below each state, itself included.
std::vector<std::uint32_t> maximal_state_counts(const RedForest& f);

bool satisfies_condition_star(const RedForest& f);

/// No maximal state receives a b-edge from an ancestor (itself included) other than its root.
bool satisfies_condition_double_star(const Automaton& a, const RedForest& f);

struct StablePair {
  State s = kNone;
  State t = kNone;
  friend bool operator==(const StablePair&, const StablePair&) = default;
};

/// (red predecessor of r, child of r above the smallest maximal state) where r is the root of
/// the unique maximal tree. Throws ConditionStarViolated.
StablePair stable_pair_from_condition_star(const Automaton& a, const RedForest& f);

}  // namespace roadcolor
