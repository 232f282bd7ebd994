#include "roadcolor/red_forest.hpp"

#include <algorithm>

#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

void count(OpCounter* ops, std::uint64_t v) {
  if (ops) ops->visits += v;
}

void require_same_cycle(const RedForest& f, State x, State y) {
  if (!f.on_cycle[x] || !f.on_cycle[y] || f.cluster[x] != f.cluster[y])
    throw Error(Errc::NotOnSameCycle, "states " + std::to_string(x) + " and " + std::to_string(y) +
                                          " are not on one red cycle");
}

}  // namespace

RedForest analyze(const Automaton& a, OpCounter* ops) {
  const std::size_t n = a.size();
  RedForest f;
  f.red_succ.resize(n);
  for (State p = 0; p < n; ++p) f.red_succ[p] = a.step(p, kRed);
  f.cluster.assign(n, kNone);
  f.on_cycle.assign(n, 0);
  f.num.assign(n, kNone);
  f.cycle_prev.assign(n, kNone);
  f.root.assign(n, kNone);
  f.top.assign(n, kNone);
  f.level.assign(n, 0);
  f.height.assign(n, 0);
  f.tin.assign(n, 0);
  f.tout.assign(n, 0);
  count(ops, n);

  // functional-graph cycle detection: 0 unseen, 1 on the current walk, 2 finished
  std::vector<char> color(n, 0);
  std::vector<State> path;
  for (State s = 0; s < n; ++s) {
    if (color[s]) continue;
    path.clear();
    State p = s;
    while (color[p] == 0) {
      color[p] = 1;
      path.push_back(p);
      p = f.red_succ[p];
    }
    if (color[p] == 1) {
      State start = p;
      for (State x = f.red_succ[p]; x != p; x = f.red_succ[x]) start = std::min(start, x);
      const auto id = static_cast<std::uint32_t>(f.cycle_length.size());
      std::uint32_t len = 0;
      State x = start;
      do {
        f.on_cycle[x] = 1;
        f.cluster[x] = id;
        f.num[x] = len++;
        f.cycle_prev[f.red_succ[x]] = x;
        x = f.red_succ[x];
      } while (x != start);
      f.cycle_length.push_back(len);
      f.cycle_start.push_back(start);
    }
    for (State q : path) color[q] = 2;
    count(ops, path.size());
  }

  f.child_offset.assign(n + 1, 0);
  for (State p = 0; p < n; ++p)
    if (!f.on_cycle[p]) ++f.child_offset[f.red_succ[p] + 1];
  for (std::size_t i = 0; i < n; ++i) f.child_offset[i + 1] += f.child_offset[i];
  f.children.resize(f.child_offset[n]);
  {
    std::vector<std::uint32_t> fill(f.child_offset.begin(), f.child_offset.end() - 1);
    for (State p = 0; p < n; ++p)
      if (!f.on_cycle[p]) f.children[fill[f.red_succ[p]]++] = p;
  }
  count(ops, n);

  // DFS from every cycle state over tree children
  std::uint32_t clock = 0;
  std::vector<std::pair<State, std::uint32_t>> stack;
  for (std::uint32_t c = 0; c < f.cycle_length.size(); ++c) {
    State x = f.cycle_start[c];
    do {
      f.root[x] = x;
      f.tin[x] = clock++;
      stack.assign(1, {x, 0});
      while (!stack.empty()) {
        auto& [p, i] = stack.back();
        auto kids = f.children_of(p);
        if (i < kids.size()) {
          State q = kids[i++];
          f.root[q] = x;
          f.cluster[q] = c;
          f.level[q] = f.level[p] + 1;
          f.top[q] = f.on_cycle[p] ? q : f.top[p];
          f.tin[q] = clock++;
          stack.push_back({q, 0});
        } else {
          f.tout[p] = clock++;
          State done = p;
          stack.pop_back();
          if (!stack.empty()) {
            State parent = stack.back().first;
            f.height[parent] = std::max(f.height[parent], f.height[done] + 1);
          }
          count(ops, 1);
        }
      }
      x = f.red_succ[x];
    } while (x != f.cycle_start[c]);
  }

  for (State p = 0; p < n; ++p) f.max_level = std::max(f.max_level, f.level[p]);
  f.maximal_roots.assign(f.cycle_length.size(), {});
  if (f.max_level > 0) {
    for (State p = 0; p < n; ++p)
      if (f.level[p] == f.max_level) f.maximal_states.push_back(p);
    for (std::uint32_t c = 0; c < f.cycle_length.size(); ++c) {
      State x = f.cycle_start[c];
      do {
        if (f.height[x] == f.max_level) f.maximal_roots[c].push_back(x);
        x = f.red_succ[x];
      } while (x != f.cycle_start[c]);
    }
  }
  count(ops, n);
  return f;
}

std::uint32_t segment_height(const RedForest& f, const Automaton&, State t, State r) {
  require_same_cycle(f, t, r);
  std::uint32_t best = 0, d = 1;
  for (State x = f.cycle_prev[r]; x != t && x != r; x = f.cycle_prev[x], ++d)
    best = std::max(best, f.height[x] + d);
  return best;
}

bool cyclic_interval_contains(const RedForest& f, State x, State from, State to_excl) {
  require_same_cycle(f, x, from);
  require_same_cycle(f, x, to_excl);
  if (from == to_excl) return true;
  const std::uint32_t len = f.cycle_length[f.cluster[x]];
  auto offset = [&](State y) { return (f.num[y] + len - f.num[from]) % len; };
  return offset(x) < offset(to_excl);
}

std::vector<std::uint32_t> maximal_state_counts(const RedForest& f) {
  const std::size_t n = f.size();
  std::vector<std::uint32_t> counts(n, 0);
  if (f.max_level == 0) return counts;
  std::vector<std::vector<State>> by_level(f.max_level + 1);
  for (State p = 0; p < n; ++p) by_level[f.level[p]].push_back(p);
  for (State p : f.maximal_states) counts[p] = 1;
  for (std::uint32_t l = f.max_level; l > 0; --l)
    for (State p : by_level[l]) counts[f.red_succ[p]] += counts[p];
  return counts;
}

bool satisfies_condition_star(const RedForest& f) {
  if (f.max_level == 0 || f.maximal_states.empty()) return false;
  const State r = f.root[f.maximal_states.front()];
  return std::all_of(f.maximal_states.begin(), f.maximal_states.end(),
                     [&](State p) { return f.root[p] == r; });
}

bool satisfies_condition_double_star(const Automaton& a, const RedForest& f) {
  if (f.max_level == 0) return true;
  for (State t = 0; t < a.size(); ++t) {
    if (f.on_cycle[t]) continue;
    for (Letter l = 1; l < a.alphabet_size(); ++l) {
      State p = a.step(t, l);
      if (f.level[p] == f.max_level && f.is_ancestor_or_self(t, p)) return false;
    }
  }
  return true;
}

StablePair stable_pair_from_condition_star(const Automaton&, const RedForest& f) {
  if (!satisfies_condition_star(f))
    throw Error(Errc::ConditionStarViolated, "maximal states are spread over several trees");
  const State p = f.maximal_states.front();
  return {f.cycle_prev[f.root[p]], f.top[p]};
}

}  // namespace roadcolor
