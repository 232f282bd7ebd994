#include "roadcolor/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "roadcolor/error.hpp"
#include "roadcolor/fixtures.hpp"

namespace roadcolor {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Random: return "random";
    case Family::CycleTrees: return "cycle_trees";
    case Family::BunchedLayers: return "bunched_layers";
    case Family::FigureFixture: return "figure_fixture";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Random, Family::CycleTrees, Family::BunchedLayers, Family::FigureFixture})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

using Rows = std::vector<std::vector<State>>;

void shuffle(std::vector<State>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(static_cast<std::uint32_t>(i))]);
}

[[noreturn]] void unsatisfiable(const GenSpec& s, const std::string& why) {
  throw Error(Errc::Unsatisfiable, "n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) +
                                       " period=" + std::to_string(s.period) + ": " + why);
}

// Slot 0 is the cycle 0 -> 1 -> ... -> n-1 -> 0 until the rows are shuffled. With d > 1 every edge goes from
// class i mod d to the next class.
Rows layered(const GenSpec& s, Rng& rng, bool bunches) {
  const std::size_t n = s.n, k = s.k, d = s.period;
  Rows adj(n, std::vector<State>(k));
  const auto per_class = static_cast<std::uint32_t>(n / d);
  for (State p = 0; p < n; ++p) {
    adj[p][0] = static_cast<State>((p + 1) % n);
    const bool bunch = bunches && rng.below(2) == 0;
    for (std::size_t l = 1; l < k; ++l) {
      if (bunch) {
        adj[p][l] = adj[p][0];
      } else if (d == 1) {
        adj[p][l] = rng.below(static_cast<std::uint32_t>(n));
      } else {
        adj[p][l] = static_cast<State>(rng.below(per_class) * d + (p + 1) % d);
      }
    }
  }
  return adj;
}

void check_layered(const GenSpec& s) {
  if (s.period > s.n) unsatisfiable(s, "period exceeds n");
  if (s.n % s.period != 0) unsatisfiable(s, "period must divide n");
  if (s.k == 1 && s.period != s.n) unsatisfiable(s, "k=1 forces period n");
}

// Closes the cycle 0 -> ... -> d-1 -> 0 on slot 1 (or a loop when d = 1) unless the
// period is already right.
void force_period(const GenSpec& s, Rng& rng, Rows& adj) {
  if (s.n == 1 || period(Digraph(s.n, s.k, adj)) == s.period) return;
  const std::size_t l = 1 + rng.below(static_cast<std::uint32_t>(s.k - 1));
  if (s.period == 1) {
    const State p = rng.below(static_cast<std::uint32_t>(s.n));
    adj[p][l] = p;
  } else {
    adj[s.period - 1][l] = 0;
  }
}

Rows cycle_trees(const GenSpec& s, Rng& rng) {
  const std::size_t n = s.n, k = s.k;
  if (s.period != 1) unsatisfiable(s, "cycle_trees is aperiodic only");
  if (k < 2 && n > 1) unsatisfiable(s, "k=1 forces period n");
  Rows adj(n, std::vector<State>(k));
  const std::size_t len = 1 + rng.below(static_cast<std::uint32_t>(std::min<std::size_t>(n, 4)));
  for (State p = 0; p < n; ++p) {
    if (p < len) {
      adj[p][0] = static_cast<State>((p + 1) % len);
    } else {
      adj[p][0] = p - 1 - rng.below(std::min<State>(p, 4));
    }
  }
  if (k >= 2) {
    std::vector<State> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    for (std::size_t i = 0; i < n; ++i) adj[order[i]][1] = order[(i + 1) % n];
  }
  for (State p = 0; p < n; ++p)
    for (std::size_t l = 2; l < k; ++l) adj[p][l] = rng.below(static_cast<std::uint32_t>(n));
  if (n > 1 && period(Digraph(n, k, adj)) != 1) adj[0][0] = 0;
  return adj;
}

}  // namespace

Digraph gen_random(const GenSpec& s) {
  if (s.family == Family::FigureFixture) {
    const auto& all = fixtures();
    return all[s.seed % all.size()].automaton.as_digraph();
  }
  if (s.n == 0 || s.k == 0 || s.period == 0) throw Error(Errc::Shape, "n, k and period must be positive");
  Rng rng(s.seed);
  Rows adj;
  if (s.family == Family::CycleTrees) {
    adj = cycle_trees(s, rng);
  } else {
    check_layered(s);
    adj = layered(s, rng, s.family == Family::BunchedLayers);
    force_period(s, rng, adj);
    for (auto& row : adj) shuffle(row, rng);
  }
  Digraph g(s.n, s.k, adj);
  if (!is_strongly_connected(g) || period(g) != s.period) unsatisfiable(s, "generated graph misses the period");
  return g;
}

}  // namespace roadcolor
