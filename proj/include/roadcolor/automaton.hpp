#pragma once

#include <memory>
#include <span>
#include <vector>

#include "roadcolor/digraph.hpp"

namespace roadcolor {

/// A coloring of a Digraph: delta(p, a) for every state p and letter a.
/// For each state the targets of delta(p, .) are a permutation of the
/// state's out-edge slots in the base graph.
class Automaton {
 public:
  /// Identity coloring: letter i labels slot i.
  explicit Automaton(Digraph g);
  explicit Automaton(std::shared_ptr<const Digraph> g);

  /// Coloring of `g` given as row-major transitions; throws Shape when the
  /// per-state target multisets differ from the graph's.
  Automaton(std::shared_ptr<const Digraph> g, std::vector<State> delta);

  /// Automaton whose base graph is read off its own transitions.
  static Automaton from_transitions(std::size_t n, std::size_t k,
                                    const std::vector<std::vector<State>>& delta);

  std::size_t size() const noexcept { return base_->size(); }
  std::size_t alphabet_size() const noexcept { return base_->degree(); }
  const Digraph& base() const noexcept { return *base_; }
  const std::shared_ptr<const Digraph>& base_ptr() const noexcept { return base_; }

  State step(State p, Letter a) const noexcept {
    return delta_[static_cast<std::size_t>(p) * alphabet_size() + a];
  }
  State run(State p, std::span<const Letter> w) const noexcept {
    for (Letter a : w) p = step(p, a);
    return p;
  }
  std::span<const State> row(State p) const noexcept {
    return {delta_.data() + static_cast<std::size_t>(p) * alphabet_size(), alphabet_size()};
  }
  const std::vector<State>& transitions() const noexcept { return delta_; }
  std::vector<std::vector<State>> rows() const;

  /// Exchanges the targets of letters a and b at p.
  void swap_labels(State p, Letter a, Letter b);

  /// The transitions viewed as a plain graph (slot i = letter i).
  Digraph as_digraph() const;

  /// Equal transitions; the base graph's slot order is not compared.
  friend bool operator==(const Automaton& x, const Automaton& y) {
    return x.alphabet_size() == y.alphabet_size() && x.delta_ == y.delta_;
  }

 private:
  std::shared_ptr<const Digraph> base_;
  std::vector<State> delta_;
};

Automaton flip(const Automaton& a, State p, Letter l1, Letter l2);

/// All out-edges of p end in one state.
bool is_bunch(const Automaton& a, State p);

/// True iff each state's targets in `a` form the same multiset as in `g`.
bool is_equivalent(const Automaton& a, const Digraph& g);

}  // namespace roadcolor
