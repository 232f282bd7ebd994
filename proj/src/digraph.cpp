#include "roadcolor/digraph.hpp"

#include <numeric>
#include <queue>
#include <string>

#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

void check_dims(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw Error(Errc::Shape, "n and k must be positive");
  if (n > std::size_t{1} << 30) throw Error(Errc::Shape, "too many states");
}

std::vector<bool> reach(const Digraph& g, bool reverse) {
  const std::size_t n = g.size();
  std::vector<std::vector<State>> in;
  if (reverse) {
    in.resize(n);
    for (State p = 0; p < n; ++p)
      for (State q : g.out(p)) in[q].push_back(p);
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    State p = stack.back();
    stack.pop_back();
    auto next = reverse ? std::span<const State>(in[p]) : g.out(p);
    for (State q : next) {
      if (!seen[q]) {
        seen[q] = true;
        stack.push_back(q);
      }
    }
  }
  return seen;
}

}  // namespace

Digraph::Digraph(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& adj) {
  check_dims(n, k);
  if (adj.size() != n)
    throw Error(Errc::Shape, "expected " + std::to_string(n) + " rows, got " + std::to_string(adj.size()));
  n_ = n;
  k_ = k;
  targets_.reserve(n * k);
  for (std::size_t p = 0; p < n; ++p) {
    if (adj[p].size() != k)
      throw Error(Errc::Shape, "row " + std::to_string(p) + " has " + std::to_string(adj[p].size()) +
                                   " entries, expected " + std::to_string(k));
    for (State q : adj[p]) {
      if (q >= n) throw Error(Errc::Shape, "row " + std::to_string(p) + " targets out-of-range state " + std::to_string(q));
      targets_.push_back(q);
    }
  }
}

Digraph Digraph::from_flat(std::size_t n, std::size_t k, std::vector<State> targets) {
  check_dims(n, k);
  if (targets.size() != n * k) throw Error(Errc::Shape, "flat target table has wrong length");
  for (State q : targets)
    if (q >= n) throw Error(Errc::Shape, "out-of-range target " + std::to_string(q));
  Digraph g;
  g.n_ = n;
  g.k_ = k;
  g.targets_ = std::move(targets);
  return g;
}

std::vector<std::vector<State>> Digraph::rows() const {
  std::vector<std::vector<State>> out_rows(n_);
  for (State p = 0; p < n_; ++p) out_rows[p].assign(out(p).begin(), out(p).end());
  return out_rows;
}

Digraph new_digraph(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& adj) {
  return Digraph(n, k, adj);
}

bool is_strongly_connected(const Digraph& g) {
  for (bool reverse : {false, true}) {
    auto seen = reach(g, reverse);
    for (bool s : seen)
      if (!s) return false;
  }
  return true;
}

std::size_t period(const Digraph& g) {
  if (!is_strongly_connected(g)) throw Error(Errc::NotIrreducible, "period needs a strongly connected graph");
  const std::size_t n = g.size();
  std::vector<std::int64_t> level(n, -1);
  std::queue<State> queue;
  level[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop();
    for (State q : g.out(p)) {
      if (level[q] < 0) {
        level[q] = level[p] + 1;
        queue.push(q);
      }
    }
  }
  std::int64_t d = 0;
  for (State p = 0; p < n; ++p)
    for (State q : g.out(p)) d = std::gcd(d, level[p] + 1 - level[q]);
  return static_cast<std::size_t>(d < 0 ? -d : d);
}

}  // namespace roadcolor
