#include "roadcolor/automaton.hpp"

#include <algorithm>
#include <string>

#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

bool same_row_multiset(std::span<const State> x, std::span<const State> y) {
  if (x.size() != y.size()) return false;
  if (x.size() <= 4) {
    return std::is_permutation(x.begin(), x.end(), y.begin());
  }
  std::vector<State> a(x.begin(), x.end()), b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

Automaton::Automaton(Digraph g) : Automaton(std::make_shared<const Digraph>(std::move(g))) {}

Automaton::Automaton(std::shared_ptr<const Digraph> g) : base_(std::move(g)), delta_(base_->targets()) {}

Automaton::Automaton(std::shared_ptr<const Digraph> g, std::vector<State> delta)
    : base_(std::move(g)), delta_(std::move(delta)) {
  const std::size_t n = base_->size(), k = base_->degree();
  if (delta_.size() != n * k) throw Error(Errc::Shape, "transition table has wrong length");
  for (State p = 0; p < n; ++p) {
    if (!same_row_multiset(row(p), base_->out(p)))
      throw Error(Errc::Shape, "state " + std::to_string(p) + " is not a relabeling of the graph row");
  }
}

Automaton Automaton::from_transitions(std::size_t n, std::size_t k,
                                      const std::vector<std::vector<State>>& delta) {
  return Automaton(Digraph(n, k, delta));
}

std::vector<std::vector<State>> Automaton::rows() const {
  std::vector<std::vector<State>> out(size());
  for (State p = 0; p < size(); ++p) out[p].assign(row(p).begin(), row(p).end());
  return out;
}

void Automaton::swap_labels(State p, Letter a, Letter b) {
  const std::size_t base = static_cast<std::size_t>(p) * alphabet_size();
  std::swap(delta_[base + a], delta_[base + b]);
}

Digraph Automaton::as_digraph() const { return Digraph::from_flat(size(), alphabet_size(), delta_); }

Automaton flip(const Automaton& a, State p, Letter l1, Letter l2) {
  if (l1 == l2) throw Error(Errc::SameLetter, "flip needs two distinct letters");
  if (p >= a.size() || l1 >= a.alphabet_size() || l2 >= a.alphabet_size())
    throw Error(Errc::Shape, "flip argument out of range");
  Automaton out = a;
  out.swap_labels(p, l1, l2);
  return out;
}

bool is_bunch(const Automaton& a, State p) {
  auto r = a.row(p);
  return std::all_of(r.begin(), r.end(), [&](State q) { return q == r[0]; });
}

bool is_equivalent(const Automaton& a, const Digraph& g) {
  if (a.size() != g.size() || a.alphabet_size() != g.degree()) return false;
  for (State p = 0; p < g.size(); ++p)
    if (!same_row_multiset(a.row(p), g.out(p))) return false;
  return true;
}

}  // namespace roadcolor
