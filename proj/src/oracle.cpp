#include "roadcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "roadcolor/error.hpp"

namespace roadcolor::oracle {

namespace {

constexpr std::size_t kMaxWordStates = 16;
constexpr std::size_t kMaxRankStates = 12;

std::uint32_t image(const Automaton& a, std::uint32_t set, Letter l) {
  std::uint32_t out = 0;
  for (std::uint32_t s = set; s; s &= s - 1) out |= 1u << a.step(static_cast<State>(std::countr_zero(s)), l);
  return out;
}

}  // namespace

std::size_t PairSet::off_diagonal_count() const {
  std::size_t c = 0;
  for (State p = 0; p < n_; ++p)
    for (State q = p + 1; q < n_; ++q) c += contains(p, q);
  return c;
}

namespace {

constexpr Letter kDiagonal = kNone - 1;

// For every ordered pair, the first letter of a shortest word merging it,
// kDiagonal on the diagonal and kNone when no word merges it.
std::vector<Letter> merging_letters(const Automaton& a) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  auto id = [n](State p, State q) { return static_cast<std::size_t>(p) * n + q; };

  // reverse pair graph on ordered pairs, CSR
  std::vector<std::uint32_t> offset(n * n + 1, 0);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      for (Letter l = 0; l < k; ++l) ++offset[id(a.step(p, l), a.step(q, l)) + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<std::uint32_t> from(offset.back());
  std::vector<Letter> via(offset.back());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (State p = 0; p < n; ++p)
      for (State q = 0; q < n; ++q)
        for (Letter l = 0; l < k; ++l) {
          const std::uint32_t slot = fill[id(a.step(p, l), a.step(q, l))]++;
          from[slot] = static_cast<std::uint32_t>(id(p, q));
          via[slot] = l;
        }
  }

  std::vector<Letter> first(n * n, kNone);
  std::queue<std::uint32_t> queue;
  for (State p = 0; p < n; ++p) {
    first[id(p, p)] = kDiagonal;
    queue.push(static_cast<std::uint32_t>(id(p, p)));
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop();
    for (std::uint32_t i = offset[v]; i < offset[v + 1]; ++i) {
      std::uint32_t u = from[i];
      if (first[u] == kNone) {
        first[u] = via[i];
        queue.push(u);
      }
    }
  }
  return first;
}

}  // namespace

PairSet synchronizable_pairs(const Automaton& a) {
  const std::size_t n = a.size();
  const std::vector<Letter> first = merging_letters(a);
  PairSet result(n);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (first[static_cast<std::size_t>(p) * n + q] != kNone) result.insert(p, q);
  return result;
}

std::optional<Word> greedy_sync_word(const Automaton& a) {
  const std::size_t n = a.size();
  const std::vector<Letter> first = merging_letters(a);
  std::vector<State> current(n);
  std::iota(current.begin(), current.end(), 0);
  Word w;
  while (current.size() > 1) {
    State p = current[0], q = current[1];
    const std::size_t start = w.size();
    while (p != q) {
      const Letter l = first[static_cast<std::size_t>(p) * n + q];
      if (l == kNone) return std::nullopt;
      w.push_back(l);
      p = a.step(p, l);
      q = a.step(q, l);
    }
    for (State& x : current) x = a.run(x, std::span<const Letter>(w).subspan(start));
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
  }
  return w;
}

bool is_synchronized(const Automaton& a) {
  const std::size_t n = a.size();
  if (n == 1) return true;
  return synchronizable_pairs(a).off_diagonal_count() == n * (n - 1) / 2;
}

std::optional<Word> shortest_sync_word(const Automaton& a) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  if (n > kMaxWordStates) throw Error(Errc::TooLarge, "subset search is limited to 16 states");
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, Letter>> parent;
  parent.emplace(full, std::pair{full, Letter{0}});
  std::queue<std::uint32_t> queue;
  queue.push(full);
  while (!queue.empty()) {
    std::uint32_t s = queue.front();
    queue.pop();
    if (std::popcount(s) == 1) {
      Word w;
      for (std::uint32_t x = s; x != full; x = parent[x].first) w.push_back(parent[x].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter l = 0; l < k; ++l) {
      std::uint32_t t = image(a, s, l);
      if (parent.emplace(t, std::pair{s, l}).second) queue.push(t);
    }
  }
  return std::nullopt;
}

bool is_stable(const Automaton& a, State p, State q) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  if (p >= n || q >= n) throw Error(Errc::Shape, "pair state out of range");
  PairSet sync = synchronizable_pairs(a);
  std::vector<char> seen(n * n, 0);
  std::queue<std::pair<State, State>> queue;
  queue.push({p, q});
  seen[static_cast<std::size_t>(p) * n + q] = 1;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop();
    if (!sync.contains(x, y)) return false;
    for (Letter l = 0; l < k; ++l) {
      State u = a.step(x, l), v = a.step(y, l);
      if (!seen[static_cast<std::size_t>(u) * n + v]) {
        seen[static_cast<std::size_t>(u) * n + v] = 1;
        queue.push({u, v});
      }
    }
  }
  return true;
}

std::size_t minimal_rank(const Automaton& a) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  if (n > kMaxRankStates) throw Error(Errc::TooLarge, "image search is limited to 12 states");
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> stack{full};
  seen[full] = 1;
  std::size_t best = n;
  while (!stack.empty()) {
    std::uint32_t s = stack.back();
    stack.pop_back();
    best = std::min<std::size_t>(best, std::popcount(s));
    for (Letter l = 0; l < k; ++l) {
      std::uint32_t t = image(a, s, l);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return best;
}

void enumerate_colorings(const Digraph& g, const std::function<bool(const Automaton&)>& visit) {
  const std::size_t n = g.size(), k = g.degree();
  double total = 1, fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  for (std::size_t i = 0; i < n; ++i) total *= fact;
  if (total > 1e6) throw Error(Errc::TooLarge, "more than 10^6 colorings");

  auto base = std::make_shared<const Digraph>(g);
  std::vector<std::vector<State>> first(n);
  for (State p = 0; p < n; ++p) {
    first[p].assign(g.out(p).begin(), g.out(p).end());
    std::sort(first[p].begin(), first[p].end());
  }
  std::vector<std::vector<State>> cur = first;
  for (;;) {
    std::vector<State> delta;
    delta.reserve(n * k);
    for (auto& row : cur) delta.insert(delta.end(), row.begin(), row.end());
    if (!visit(Automaton(base, std::move(delta)))) return;
    // odometer over per-state permutations, state 0 fastest
    std::size_t p = 0;
    while (p < n && !std::next_permutation(cur[p].begin(), cur[p].end())) ++p;
    if (p == n) return;
  }
}

std::size_t count_colorings(const Digraph& g) {
  std::size_t c = 0;
  enumerate_colorings(g, [&](const Automaton&) {
    ++c;
    return true;
  });
  return c;
}

std::size_t brute_force_period(const Digraph& g) {
  const std::size_t n = g.size();
  std::size_t d = 0;
  // simple cycles whose smallest state is `start`
  std::vector<char> on_path(n, 0);
  for (State start = 0; start < n; ++start) {
    std::vector<std::pair<State, std::size_t>> stack{{start, 0}};
    on_path[start] = 1;
    while (!stack.empty()) {
      auto& [p, i] = stack.back();
      if (i == g.degree()) {
        on_path[p] = 0;
        stack.pop_back();
        continue;
      }
      State q = g.out(p)[i++];
      if (q == start) {
        d = std::gcd(d, stack.size());
      } else if (q > start && !on_path[q]) {
        on_path[q] = 1;
        stack.push_back({q, 0});
      }
    }
  }
  return d;
}

}  // namespace roadcolor::oracle
