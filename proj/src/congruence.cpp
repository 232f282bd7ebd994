#include "roadcolor/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "roadcolor/error.hpp"

namespace roadcolor {

Congruence::Congruence(std::size_t n) : parent_(n), size_(n, 1), classes_(n) {
  std::iota(parent_.begin(), parent_.end(), State{0});
}

State Congruence::find(State p) {
  State r = p;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[p] != r) {
    State next = parent_[p];
    parent_[p] = r;
    p = next;
  }
  return r;
}

State Congruence::find(State p) const {
  while (parent_[p] != p) p = parent_[p];
  return p;
}

State Congruence::unite(State x, State y) {
  x = find(x);
  y = find(y);
  if (x == y) return x;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --classes_;
  return x;
}

std::vector<State> Congruence::leaders() const {
  std::vector<State> out(size());
  for (State p = 0; p < size(); ++p) out[p] = find(p);
  return out;
}

void merge_into(const Automaton& a, Congruence& c, State s, State t, OpCounter* ops) {
  if (s >= a.size() || t >= a.size()) throw Error(Errc::Shape, "merge state out of range");
  std::vector<std::pair<State, State>> stack{{s, t}};
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (ops) ++ops->merges;
    const State x = c.find(p), y = c.find(q);
    if (x == y) continue;
    c.unite(x, y);
    if (ops) ++ops->unions;
    for (Letter l = 0; l < a.alphabet_size(); ++l) stack.push_back({a.step(x, l), a.step(y, l)});
  }
}

Congruence merge(const Automaton& a, Congruence c, State s, State t) {
  merge_into(a, c, s, t);
  return c;
}

bool is_closed(const Automaton& a, const Congruence& c) {
  for (State p = 0; p < a.size(); ++p) {
    const State x = c.find(p);
    for (Letter l = 0; l < a.alphabet_size(); ++l)
      if (c.find(a.step(p, l)) != c.find(a.step(x, l))) return false;
  }
  return true;
}

Quotient quotient(const Automaton& a, const Congruence& c, OpCounter* ops) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  if (c.size() != n) throw Error(Errc::Shape, "congruence size differs from the automaton");
  if (!is_closed(a, c)) throw Error(Errc::NotClosed, "partition is not compatible with the transitions");
  std::vector<State> leader = c.leaders();
  QuotientMap qm;
  qm.class_of.assign(n, kNone);
  std::vector<State> id(n, kNone);
  for (State p = 0; p < n; ++p) {
    State l = leader[p];
    if (id[l] == kNone) {
      id[l] = static_cast<State>(qm.section.size());
      qm.section.push_back(l);
    }
    qm.class_of[p] = id[l];
  }
  const std::size_t m = qm.section.size();
  std::vector<std::vector<State>> rows(m, std::vector<State>(k));
  for (State x = 0; x < m; ++x)
    for (Letter l = 0; l < k; ++l) rows[x][l] = qm.class_of[a.step(qm.section[x], l)];
  if (ops) ops->visits += n + m * k;
  return {Automaton::from_transitions(m, k, rows), std::move(qm)};
}

Automaton lift_coloring(const Automaton& a, const QuotientMap& qm, const Automaton& b, OpCounter* ops) {
  const std::size_t n = a.size(), k = a.alphabet_size();
  if (qm.class_of.size() != n || b.alphabet_size() != k)
    throw Error(Errc::NotAQuotient, "quotient map does not fit the automaton");
  std::vector<State> delta(n * k);
  std::vector<std::pair<State, Letter>> slots(k), wanted(k);
  for (State p = 0; p < n; ++p) {
    const State c = qm.class_of[p];
    if (c >= b.size()) throw Error(Errc::NotAQuotient, "class index out of range");
    for (Letter j = 0; j < k; ++j) {
      slots[j] = {qm.class_of[a.step(p, j)], j};
      wanted[j] = {b.step(c, j), j};
    }
    std::sort(slots.begin(), slots.end());
    std::sort(wanted.begin(), wanted.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (slots[i].first != wanted[i].first)
        throw Error(Errc::NotAQuotient, "state " + std::to_string(p) + " does not project onto its class");
      delta[static_cast<std::size_t>(p) * k + wanted[i].second] = a.step(p, slots[i].second);
    }
  }
  if (ops) ops->visits += n * k;
  return Automaton(a.base_ptr(), std::move(delta));
}

}  // namespace roadcolor
