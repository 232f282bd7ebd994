#include "roadcolor/stable_pair_search.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "roadcolor/error.hpp"

namespace roadcolor {

const char* outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::FoundPair: return "FoundPair";
    case Outcome::Deferred: return "Deferred";
    case Outcome::Continue: return "Continue";
    case Outcome::PeriodicTerminal: return "PeriodicTerminal";
  }
  return "?";
}

bool SearchResult::has_rule(const std::string& rule) const {
  return std::any_of(trace.begin(), trace.end(), [&](const TraceEntry& e) { return e.rule == rule; });
}

std::size_t SearchResult::flip_count() const {
  return static_cast<std::size_t>(std::count_if(trace.begin(), trace.end(), [](const TraceEntry& e) { return e.flip; }));
}

namespace {

constexpr std::size_t kMaxCallsPerRoot = 3;

[[noreturn]] void exhausted(const std::string& what) { throw Error(Errc::CaseAnalysisExhausted, what); }

// A result of the per-root treatment before it is turned into a SearchResult.
struct Step {
  Outcome kind;
  StablePair pair{};
  BEdge edge{};
};

// Mutable view of the automaton and its red forest shared by every stage of one search.
// Tree data is patched locally after flips; a full analysis is run only a bounded number
// of times per search.
class Search {
 public:
  Search(Automaton a, SearchStats* stats) : a_(std::move(a)), stats_(stats), n_(a_.size()), k_(a_.alphabet_size()) {
    build_sources();
    const std::size_t n = n_;
    is_max_root_.assign(n, 0);
    arc_stamp_.assign(n, 0);
    arc_dist_.assign(n, 0);
    mark_.assign(n, 0);
    cand_.assign(n, BEdge{});
    count_.assign(n, 0);
  }

  Automaton& automaton() { return a_; }
  const RedForest& forest() const { return f_; }
  std::uint32_t ell() const { return ell_; }

  SearchResult result(const Step& s) {
    finish_stats();
    SearchResult r{s.kind, std::move(a_), s.pair, s.edge, std::move(trace_)};
    return r;
  }

  void full_analyze() {
    f_ = analyze(a_, &ops_);
    ell_ = f_.max_level;
    red_in_.assign(n_, {});
    red_in_pos_.assign(n_, 0);
    for (State p = 0; p < n_; ++p) {
      red_in_pos_[p] = static_cast<std::uint32_t>(red_in_[f_.red_succ[p]].size());
      red_in_[f_.red_succ[p]].push_back(p);
    }
    clock_ = 0;
    for (State p = 0; p < n_; ++p) clock_ = std::max(clock_, f_.tout[p] + 1);
    next_cluster_ = static_cast<std::uint32_t>(f_.cluster_count());
    ops_.visits += n_;
  }

  // ---- level zero ----

  Step level_zero() {
    for (State p = 0; p < n_; ++p) {
      ++ops_.visits;
      if (is_bunch(a_, p)) continue;
      const State q = a_.step(p, kRed);
      Letter l = 1;
      while (a_.step(p, l) == q) ++l;
      const State r = a_.step(p, l);
      const State s = f_.cycle_prev[r];
      flip(p, l, "level_zero");
      return {Outcome::FoundPair, {p, s}, {}};
    }
    trace_.push_back({"periodic_terminal", kNone, 0, false});
    return {Outcome::PeriodicTerminal, {}, {}};
  }

  // ---- preliminary flips ----

  // Topmost witnesses of the tree rooted at r, ascending. Uses the full forest (children CSR).
  std::vector<Witness> explore_tree(State r) {
    std::vector<State> order;  // preorder without r
    std::vector<State> maximal;
    std::vector<State> stack(f_.children_of(r).begin(), f_.children_of(r).end());
    while (!stack.empty()) {
      State p = stack.back();
      stack.pop_back();
      order.push_back(p);
      ++ops_.visits;
      if (f_.level[p] == ell_) maximal.push_back(p);
      for (State c : f_.children_of(p)) stack.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    for (State p : maximal) note_witnesses(p, [&](State t) { return !f_.on_cycle[t] && f_.is_ancestor_or_self(t, p); });
    std::vector<Witness> out;
    // preorder: a parent is visited before its children
    for (State p : order) {
      State parent = f_.red_succ[p];
      bool above = !f_.on_cycle[parent] && (mark_[parent] & 2);
      if (above) mark_[p] |= 2;
      if (cand_[p].from != kNone) {
        if (!above) out.push_back({p, cand_[p]});
        mark_[p] |= 2;
      }
    }
    for (State p : order) {
      mark_[p] = 0;
      cand_[p] = BEdge{};
    }
    std::sort(out.begin(), out.end(), [](const Witness& x, const Witness& y) { return x.t < y.t; });
    return out;
  }

  Step scan_trees() {
    std::vector<Witness> s;
    for (std::uint32_t c = 0; c < f_.cluster_count(); ++c)
      for (State r : f_.maximal_roots[c]) {
        auto w = explore_tree(r);
        s.insert(s.end(), w.begin(), w.end());
      }
    std::sort(s.begin(), s.end(), [](const Witness& x, const Witness& y) { return x.t < y.t; });
    if (s.empty()) return {Outcome::Continue, {}, {}};
    const std::vector<std::uint32_t> counts = maximal_state_counts(f_);
    ops_.visits += n_;
    std::size_t m = f_.maximal_states.size();
    std::size_t kept = 0;
    for (const Witness& w : s) {
      if (counts[w.t] < m) {
        flip(w.t, w.edge.letter, "scan_trees");
        m -= counts[w.t];
      } else {
        ++kept;
      }
    }
    if (kept > 1) exhausted("several witnesses cover all maximal states");
    if (kept == 1) return found("scan_trees");
    full_analyze();
    return {Outcome::Continue, {}, {}};
  }

  // ---- main treatment ----

  Step main_treatment() {
    std::vector<State> roots;
    for (std::uint32_t c = 0; c < f_.cluster_count(); ++c)
      for (State r : f_.maximal_roots[c]) {
        roots.push_back(r);
        is_max_root_[r] = 1;
      }
    if (roots.empty()) exhausted("no maximal root");
    std::vector<BEdge> deferred(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Step s = flip_edges(roots[i]);
      if (s.kind == Outcome::FoundPair) return s;
      deferred[i] = s.edge;
    }
    for (std::size_t i = 1; i < roots.size(); ++i) {
      const BEdge& e = deferred[i];
      if (a_.step(e.from, e.letter) != e.to) exhausted("deferred edge was overwritten");
      flip(e.from, e.letter, "final");
    }
    return found("final");
  }

  // FlipEdges on one root with every maximal root known, as in the full treatment.
  Step main_treatment_single(State r) {
    for (std::uint32_t c = 0; c < f_.cluster_count(); ++c)
      for (State x : f_.maximal_roots[c]) is_max_root_[x] = 1;
    return flip_edges(r);
  }

  Step flip_edges(State r) {
    for (std::size_t calls = 1;; ++calls) {
      if (stats_) stats_->max_calls_per_root = std::max(stats_->max_calls_per_root, calls);
      if (calls > kMaxCallsPerRoot) exhausted("flip_edges re-entered too often at root " + std::to_string(r));
      std::optional<Step> s = flip_edges_once(r);
      if (s) return *s;
    }
  }

  // nullopt means the tree at r was rebuilt and the treatment starts again.
  std::optional<Step> flip_edges_once(State r) {
    mark_arc(r);
    std::vector<State> tree;
    relevel(r, &tree);
    std::vector<State> maximal;
    for (State p : tree)
      if (f_.level[p] == ell_) maximal.push_back(p);
    if (maximal.empty()) exhausted("root " + std::to_string(r) + " has no maximal state");
    std::sort(maximal.begin(), maximal.end());

    std::vector<State> branches;
    for (State p : maximal) branches.push_back(f_.top[p]);
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
    auto branch_of = [&](State p) {
      return static_cast<std::size_t>(std::lower_bound(branches.begin(), branches.end(), f_.top[p]) - branches.begin());
    };

    struct Rec {
      State t;
      Letter letter;
      State p;
      std::size_t branch;
    };
    std::vector<Rec> recs;
    for (State p : maximal) {
      for (std::uint32_t i = src_off_[p]; i < src_off_[p + 1]; ++i) {
        const State t = src_[i];
        ++ops_.visits;
        const Letter l = letter_to(t, p);
        if (l == 0) continue;
        if (!f_.on_cycle[t] && f_.is_ancestor_or_self(t, p))
          throw Error(Errc::ConditionDoubleStarViolated, "state " + std::to_string(t) + " is an ancestor of " + std::to_string(p));
        if (f_.cluster[t] != f_.cluster[r] || f_.level[t] != 0 || arc_stamp_[t] != stamp_) {
          flip(t, l, "case1");
          return found("case1");
        }
        recs.push_back({t, l, p, branch_of(p)});
      }
    }
    if (recs.empty()) exhausted("maximal state without incoming b-edge");

    // earliest in the arc first
    std::stable_sort(recs.begin(), recs.end(), [&](const Rec& x, const Rec& y) { return arc_dist_[x.t] > arc_dist_[y.t]; });
    const Rec* w1 = &recs.front();
    const Rec* w2 = nullptr;
    for (const Rec& x : recs)
      if (x.t != w1->t && x.branch != w1->branch) {
        w2 = &x;
        break;
      }
    if (!w2) {
      const Rec* same_branch = nullptr;
      const Rec* same_state = nullptr;
      for (const Rec& x : recs) {
        if (!same_branch && x.branch == w1->branch && x.t != w1->t) same_branch = &x;
        if (!same_state && x.t == w1->t && x.branch != w1->branch) same_state = &x;
      }
      if (same_branch && same_state) {
        w1 = same_state;
        w2 = same_branch;
      }
    }
    if (w2) {
      const std::uint32_t h = segment_height_of(w1->t, r);
      flip(w1->t, w1->letter, "case2_first");
      if (h <= ell_) flip(w2->t, w2->letter, "case2_second");
      return found(h > ell_ ? "case2_first" : "case2_second");
    }

    // all witnesses of distinct branches coincide
    if (branches.size() == 1) {
      const State p1 = maximal.front();
      State t = kNone;
      Letter l1 = 0;
      for (const Rec& x : recs)
        if (x.p == p1 && (t == kNone || x.t < t)) {
          t = x.t;
          l1 = x.letter;
        }
      return flip_edges_child(r, t, branches.front(), p1, l1);
    }
    const State t = w1->t;
    std::vector<State> ps(branches.size(), kNone);
    for (State p : maximal) {
      std::size_t b = branch_of(p);
      if (ps[b] == kNone) ps[b] = p;
    }
    for (const Rec& x : recs)
      if (x.t != t) exhausted("distinct witnesses inside one branch with several branches");
    return flip_edges_children(r, t, branches, ps);
  }

  std::optional<Step> flip_edges_child(State r, State t, State s1, State p1, Letter l1) {
    const std::uint32_t h0 = segment_height_of(t, r);
    if (h0 > ell_) {
      flip(t, l1, "child_raise");
      return found("child_raise");
    }
    if (h0 < ell_) {
      note("child_defer", t);
      return Step{Outcome::Deferred, {}, {t, l1, p1}};
    }
    const State s0 = f_.cycle_prev[r];
    const bool b0 = is_bunch(a_, s0), b1 = is_bunch(a_, s1);
    if (b0 && b1) {
      note("child_bunches", s0);
      return Step{Outcome::FoundPair, {s0, s1}, {}};
    }
    if (b0) {
      flip(t, l1, "child_bunch");
      close_cycle_through(t, p1, r);
      std::optional<BEdge> left = repair(r);
      if (left) return Step{Outcome::Deferred, {}, *left};
      return std::nullopt;
    }
    const auto [l0, q0] = exit_of(s0, r);
    if (f_.root[q0] != r) {
      flip(s0, l0, "child_s0_out");
      return found("child_s0_out");
    }
    if (f_.top[q0] != s1) {
      flip(t, l1, "child_t");
      flip(s0, l0, "child_s0");
      return found("child_s0");
    }
    note("child_defer_s0", s0);
    return Step{Outcome::Deferred, {}, {s0, l0, q0}};
  }

  std::optional<Step> flip_edges_children(State r, State t, const std::vector<State>& s, const std::vector<State>& p) {
    const Letter l1 = letter_to(t, p[0]);
    const std::uint32_t h0 = segment_height_of(t, r);
    if (h0 > ell_) {
      flip(t, l1, "children_raise");
      return found("children_raise");
    }
    if (h0 < ell_) {
      flip(t, l1, "children_lower");
      close_cycle_through(t, p[0], r);
      if (repair(r)) exhausted("single witness left after lowering at root " + std::to_string(r));
      return std::nullopt;
    }
    const State s0 = f_.cycle_prev[r];
    if (is_bunch(a_, s0)) {
      for (State si : s)
        if (is_bunch(a_, si)) {
          note("children_bunches", s0);
          return Step{Outcome::FoundPair, {s0, si}, {}};
        }
      flip(t, l1, "children_bunch");
      close_cycle_through(t, p[0], r);
      if (repair(r)) exhausted("single witness left after bunch flip at root " + std::to_string(r));
      return std::nullopt;
    }
    const auto [l0, q0] = exit_of(s0, r);
    if (f_.root[q0] != r) {
      flip(s0, l0, "children_s0_out");
    } else if (f_.top[q0] != s[0]) {
      flip(t, l1, "children_t1");
      flip(s0, l0, "children_s0");
    } else {
      flip(t, letter_to(t, p[1]), "children_t2");
      flip(s0, l0, "children_s0");
    }
    return found("children_s0");
  }

  // ---- pieces ----

  Step found(const char* where) {
    full_analyze();
    if (!satisfies_condition_star(f_)) exhausted(std::string("condition (*) does not hold after ") + where);
    return {Outcome::FoundPair, stable_pair_from_condition_star(a_, f_), {}};
  }

  // Flip letter 0 with letter l at x and keep the red predecessor lists current.
  void flip(State x, Letter l, const char* rule) {
    const State old = f_.red_succ[x];
    a_.swap_labels(x, kRed, l);
    const State now = a_.step(x, kRed);
    auto& from = red_in_[old];
    const std::uint32_t i = red_in_pos_[x];
    from[i] = from.back();
    red_in_pos_[from[i]] = i;
    from.pop_back();
    red_in_pos_[x] = static_cast<std::uint32_t>(red_in_[now].size());
    red_in_[now].push_back(x);
    f_.red_succ[x] = now;
    ++ops_.flips;
    trace_.push_back({rule, x, l, true});
  }

  void note(const char* rule, State x) { trace_.push_back({rule, x, 0, false}); }

  Letter letter_to(State t, State p) const {
    for (Letter l = 1; l < k_; ++l)
      if (a_.step(t, l) == p) return l;
    return 0;
  }

  std::pair<Letter, State> exit_of(State s0, State r) const {
    for (Letter l = 1; l < k_; ++l)
      if (a_.step(s0, l) != r) return {l, a_.step(s0, l)};
    exhausted("no exit from a non-bunch state");
  }

  // Red-cycle states from the previous maximal root (inclusive) up to r (exclusive).
  void mark_arc(State r) {
    ++stamp_;
    std::uint32_t d = 1;
    for (State x = f_.cycle_prev[r];; x = f_.cycle_prev[x], ++d) {
      ++ops_.visits;
      arc_stamp_[x] = stamp_;
      arc_dist_[x] = d;
      if (is_max_root_[x]) break;
    }
  }

  std::uint32_t segment_height_of(State t, State r) {
    std::uint32_t best = 0, d = 1;
    for (State x = f_.cycle_prev[r]; x != t && x != r; x = f_.cycle_prev[x], ++d) {
      ++ops_.visits;
      best = std::max(best, f_.height[x] + d);
    }
    return best;
  }

  // Recompute tree data below cycle state x; optionally collect the tree in preorder.
  void relevel(State x, std::vector<State>* out) {
    f_.root[x] = x;
    f_.level[x] = 0;
    f_.top[x] = kNone;
    f_.tin[x] = clock_++;
    f_.height[x] = 0;
    const std::uint32_t c = f_.cluster[x];
    std::vector<std::pair<State, std::uint32_t>> stack{{x, 0}};
    while (!stack.empty()) {
      auto& [p, i] = stack.back();
      if (i < red_in_[p].size()) {
        const State q = red_in_[p][i++];
        if (f_.on_cycle[q]) continue;
        const State parent = p;
        f_.root[q] = x;
        f_.cluster[q] = c;
        f_.level[q] = f_.level[parent] + 1;
        f_.top[q] = parent == x ? q : f_.top[parent];
        f_.tin[q] = clock_++;
        f_.height[q] = 0;
        if (out) out->push_back(q);
        stack.push_back({q, 0});
      } else {
        const State done = p;
        f_.tout[done] = clock_++;
        stack.pop_back();
        ++ops_.visits;
        if (!stack.empty()) {
          const State parent = stack.back().first;
          f_.height[parent] = std::max(f_.height[parent], f_.height[done] + 1);
        }
      }
    }
  }

  // After t (on r's cycle) was sent to p in r's tree: the path p..r joins the cycle and the
  // old segment ]t..r[ falls into r's tree.
  void close_cycle_through(State t, State p, State r) {
    for (State x = f_.cycle_prev[r]; x != t && x != r;) {
      ++ops_.visits;
      const State before = f_.cycle_prev[x];
      f_.on_cycle[x] = 0;
      f_.cycle_prev[x] = kNone;
      x = before;
    }
    std::vector<State> path;
    for (State y = p; y != r; y = f_.red_succ[y]) path.push_back(y);
    State prev = t;
    for (State y : path) {
      f_.on_cycle[y] = 1;
      f_.cluster[y] = f_.cluster[r];
      f_.cycle_prev[y] = prev;
      prev = y;
    }
    f_.cycle_prev[r] = prev;
    for (State y : path) relevel(y, nullptr);
    relevel(r, nullptr);
  }

  // y was sent to p below it: the path p..y becomes the cycle of a new cluster.
  void split_cluster(State y, State p) {
    std::vector<State> path;
    for (State z = p;; z = f_.red_succ[z]) {
      path.push_back(z);
      if (z == y) break;
    }
    const std::uint32_t c = next_cluster_++;
    State prev = y;
    for (State z : path) {
      f_.on_cycle[z] = 1;
      f_.cluster[z] = c;
      f_.cycle_prev[z] = prev;
      prev = z;
    }
    for (State z : path) relevel(z, nullptr);
  }

  // Records in cand_ the first b-edge (t, l, p) from every state t accepted by `keep`.
  template <class Keep>
  void note_witnesses(State p, Keep keep) {
    for (std::uint32_t i = src_off_[p]; i < src_off_[p + 1]; ++i) {
      const State t = src_[i];
      ++ops_.visits;
      if (cand_[t].from != kNone || !keep(t)) continue;
      const Letter l = letter_to(t, p);
      if (l != 0) cand_[t] = {t, l, p};
    }
  }

  // Restores Condition (**) inside r's tree after a flip created new maximal states. Topmost
  // witnesses not covering every maximal state of the tree are cut off into new clusters; a
  // witness covering all of them is returned untouched.
  std::optional<BEdge> repair(State r) {
    std::vector<State> tree;
    relevel(r, &tree);
    std::vector<State> maximal;
    for (State p : tree)
      if (f_.level[p] == ell_) maximal.push_back(p);
    if (maximal.empty()) exhausted("root " + std::to_string(r) + " lost its maximal states");
    std::sort(maximal.begin(), maximal.end());
    for (State p : maximal) note_witnesses(p, [&](State t) { return !f_.on_cycle[t] && f_.is_ancestor_or_self(t, p); });

    for (State p : maximal) count_[p] = 1;
    for (auto it = tree.rbegin(); it != tree.rend(); ++it) {
      const State parent = f_.red_succ[*it];
      if (!f_.on_cycle[parent]) count_[parent] += count_[*it];
    }
    std::vector<BEdge> top;
    for (State p : tree) {
      const State parent = f_.red_succ[p];
      const bool above = !f_.on_cycle[parent] && (mark_[parent] & 2);
      if (above) mark_[p] |= 2;
      if (cand_[p].from != kNone) {
        if (!above) top.push_back(cand_[p]);
        mark_[p] |= 2;
      }
    }
    std::sort(top.begin(), top.end(), [](const BEdge& x, const BEdge& y) { return x.from < y.from; });
    std::size_t m = maximal.size();
    std::optional<BEdge> left;
    std::vector<std::pair<State, State>> cut;
    for (const BEdge& e : top) {
      if (count_[e.from] < m) {
        flip(e.from, e.letter, "repair");
        m -= count_[e.from];
        cut.push_back({e.from, e.to});
      } else {
        if (left) exhausted("two witnesses cover one tree");
        left = e;
      }
    }
    for (State p : tree) {
      mark_[p] = 0;
      cand_[p] = BEdge{};
      count_[p] = 0;
    }
    for (auto [y, p] : cut) split_cluster(y, p);
    if (!cut.empty()) relevel(r, nullptr);
    return left;
  }

  void build_sources() {
    src_off_.assign(n_ + 1, 0);
    for (State p = 0; p < n_; ++p)
      for (State q : a_.row(p)) ++src_off_[q + 1];
    for (std::size_t i = 0; i < n_; ++i) src_off_[i + 1] += src_off_[i];
    src_.resize(src_off_[n_]);
    std::vector<std::uint32_t> fill(src_off_.begin(), src_off_.end() - 1);
    // sources are pushed in ascending order; duplicates are adjacent
    for (State p = 0; p < n_; ++p)
      for (State q : a_.row(p))
        if (fill[q] == src_off_[q] || src_[fill[q] - 1] != p) src_[fill[q]++] = p;
    // compact away unused slots left by duplicates
    std::uint32_t w = 0;
    std::vector<std::uint32_t> off(n_ + 1, 0);
    for (State q = 0; q < n_; ++q) {
      off[q] = w;
      for (std::uint32_t i = src_off_[q]; i < fill[q]; ++i) src_[w++] = src_[i];
    }
    off[n_] = w;
    src_.resize(w);
    src_off_ = std::move(off);
    ops_.visits += n_ * k_;
  }

  void finish_stats() {
    if (!stats_) return;
    stats_->ops += ops_;
    const std::size_t words = src_.size() + src_off_.size() + 16 * n_ + f_.children.size();
    stats_->aux_words = std::max(stats_->aux_words, words);
  }

 private:
  Automaton a_;
  SearchStats* stats_;
  std::size_t n_, k_;
  RedForest f_;
  std::uint32_t ell_ = 0;
  OpCounter ops_;
  std::vector<TraceEntry> trace_;

  std::vector<std::vector<State>> red_in_;
  std::vector<std::uint32_t> red_in_pos_;
  std::uint32_t clock_ = 0;
  std::uint32_t next_cluster_ = 0;

  std::vector<std::uint32_t> src_off_;
  std::vector<State> src_;

  std::vector<char> is_max_root_;
  std::vector<std::uint32_t> arc_stamp_, arc_dist_;
  std::uint32_t stamp_ = 0;

  std::vector<char> mark_;
  std::vector<BEdge> cand_;
  std::vector<std::uint32_t> count_;
};

}  // namespace

SearchResult flip_edges_level_zero(Automaton a) {
  Search s(std::move(a), nullptr);
  s.full_analyze();
  if (s.ell() != 0) throw Error(Errc::LevelNotZero, "maximal level is " + std::to_string(s.ell()));
  return s.result(s.level_zero());
}

std::vector<Witness> exploration(const Automaton& a, const RedForest& f, State r) {
  Search s(a, nullptr);
  s.full_analyze();
  if (s.forest().red_succ != f.red_succ) throw Error(Errc::Shape, "forest does not belong to the automaton");
  if (!f.on_cycle[r] || f.height[r] != f.max_level || f.max_level == 0)
    throw Error(Errc::Shape, "state " + std::to_string(r) + " is not a maximal root");
  return s.explore_tree(r);
}

SearchResult scan_trees(Automaton a) {
  Search s(std::move(a), nullptr);
  s.full_analyze();
  if (s.ell() == 0) throw Error(Errc::LevelNotZero, "scan_trees needs a positive level");
  return s.result(s.scan_trees());
}

SearchResult flip_edges(Automaton a, State r) {
  Search s(std::move(a), nullptr);
  s.full_analyze();
  const RedForest& f = s.forest();
  if (f.max_level == 0 || !f.on_cycle[r] || f.height[r] != f.max_level)
    throw Error(Errc::Shape, "state " + std::to_string(r) + " is not a maximal root");
  if (!satisfies_condition_double_star(s.automaton(), f))
    throw Error(Errc::ConditionDoubleStarViolated, "flip_edges needs condition (**)");
  return s.result(s.main_treatment_single(r));
}

SearchResult find_stable_pair(Automaton a, SearchStats* stats) {
  if (a.size() < 2) throw Error(Errc::TooSmall, "a stable pair needs two states");
  if (!is_strongly_connected(a.as_digraph())) throw Error(Errc::NotIrreducible, "graph is not strongly connected");
  Search s(std::move(a), stats);
  s.full_analyze();
  if (s.ell() == 0) return s.result(s.level_zero());
  Step st = s.scan_trees();
  if (st.kind == Outcome::FoundPair) return s.result(st);
  return s.result(s.main_treatment());
}

}  // namespace roadcolor
