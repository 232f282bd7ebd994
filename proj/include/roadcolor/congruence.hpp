#pragma once

#include <vector>

#include "roadcolor/automaton.hpp"
#include "roadcolor/ops.hpp"

namespace roadcolor {

/// Union-find over states with union by size and path compression.
class Congruence {
 public:
  explicit Congruence(std::size_t n);

  State find(State p);
  State find(State p) const;
  /// Returns the surviving leader.
  State unite(State x, State y);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t class_size(State p) const { return size_[find(p)]; }
  /// Fully resolved leader of every state.
  std::vector<State> leaders() const;

 private:
  std::vector<State> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t classes_;
};

/// Smallest transition-closed refinement of c that also joins s and t.
void merge_into(const Automaton& a, Congruence& c, State s, State t, OpCounter* ops = nullptr);
Congruence merge(const Automaton& a, Congruence c, State s, State t);

/// Every class maps into one class under each letter.
bool is_closed(const Automaton& a, const Congruence& c);

struct QuotientMap {
  std::vector<State> class_of;  // original state -> quotient state
  std::vector<State> section;   // quotient state -> one original state
};

struct Quotient {
  Automaton automaton;
  QuotientMap map;
};

/// Classes numbered by first appearance of their leader; the section is the leader.
/// Throws NotClosed.
Quotient quotient(const Automaton& a, const Congruence& c, OpCounter* ops = nullptr);

/// Relabels a so that it projects onto b through qm. Throws NotAQuotient.
Automaton lift_coloring(const Automaton& a, const QuotientMap& qm, const Automaton& b, OpCounter* ops = nullptr);

}  // namespace roadcolor
