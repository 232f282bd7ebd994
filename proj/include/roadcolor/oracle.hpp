#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "roadcolor/automaton.hpp"

namespace roadcolor::oracle {

/// Symmetric membership over state pairs.
class PairSet {
 public:
  explicit PairSet(std::size_t n) : n_(n), bits_(n * n, false) {}
  bool contains(State p, State q) const { return bits_[static_cast<std::size_t>(p) * n_ + q]; }
  void insert(State p, State q) {
    bits_[static_cast<std::size_t>(p) * n_ + q] = true;
    bits_[static_cast<std::size_t>(q) * n_ + p] = true;
  }
  std::size_t size() const noexcept { return n_; }
  /// Unordered off-diagonal pairs present.
  std::size_t off_diagonal_count() const;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

/// Backward closure from the diagonal in the pair graph.
PairSet synchronizable_pairs(const Automaton& a);

bool is_synchronized(const Automaton& a);

/// Some reset word, built by merging two states at a time along shortest pair
/// words; nullopt when none exists. Works at any n.
std::optional<Word> greedy_sync_word(const Automaton& a);

/// Shortest reset word by subset BFS; nullopt when none exists. Throws TooLarge for n > 16.
std::optional<Word> shortest_sync_word(const Automaton& a);

/// Every pair reachable from (p, q) is synchronizable.
bool is_stable(const Automaton& a, State p, State q);

/// Smallest reachable image size by subset BFS. Throws TooLarge for n > 12.
std::size_t minimal_rank(const Automaton& a);

/// Calls `visit` on every distinct labeling of g, stopping early when it returns false.
/// Throws TooLarge when (k!)^n exceeds one million.
void enumerate_colorings(const Digraph& g, const std::function<bool(const Automaton&)>& visit);

std::size_t count_colorings(const Digraph& g);

/// gcd of all simple cycle lengths, by exhaustive enumeration. Intended for n <= 8.
std::size_t brute_force_period(const Digraph& g);

}  // namespace roadcolor::oracle
