#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace roadcolor {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// The distinguished letter whose edges are called red.
inline constexpr Letter kRed = 0;

/// Marks an absent state.
inline constexpr State kNone = std::numeric_limits<State>::max();

/// Unlabeled multidigraph in which every state has exactly k out-edges.
/// Slot order is arbitrary but preserved; parallel edges and loops are allowed.
class Digraph {
 public:
  Digraph(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& adj);

  /// Row-major targets, n*k entries.
  static Digraph from_flat(std::size_t n, std::size_t k, std::vector<State> targets);

  std::size_t size() const noexcept { return n_; }
  std::size_t degree() const noexcept { return k_; }

  std::span<const State> out(State p) const noexcept {
    return {targets_.data() + static_cast<std::size_t>(p) * k_, k_};
  }
  const std::vector<State>& targets() const noexcept { return targets_; }

  std::vector<std::vector<State>> rows() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Digraph() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<State> targets_;
};

Digraph new_digraph(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& adj);

bool is_strongly_connected(const Digraph& g);

/// gcd of all cycle lengths, from BFS levels (gcd of level[u]+1-level[v] over edges).
/// Throws NotIrreducible when g is not strongly connected.
std::size_t period(const Digraph& g);

}  // namespace roadcolor
