#include "roadcolor/fixtures.hpp"

#include <algorithm>
#include <map>

#include "roadcolor/error.hpp"

namespace roadcolor {

namespace {

struct Edge {
  const char* from;
  Letter letter;
  const char* to;
};

struct Layout {
  const char* name;
  std::size_t k;
  std::vector<std::string> labels;
  std::vector<std::pair<const char*, const char*>> red;
  std::vector<Edge> other;
  std::vector<std::string> rules;
};

// Slots not listed in `other` are self-loops.
Fixture build(const Layout& l) {
  std::map<std::string, State> index;
  for (State i = 0; i < l.labels.size(); ++i) index.emplace(l.labels[i], i);
  auto at = [&](const char* label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(Errc::Shape, std::string("fixture label ") + label);
    return it->second;
  };
  const std::size_t n = l.labels.size();
  std::vector<std::vector<State>> rows(n, std::vector<State>(l.k));
  for (State p = 0; p < n; ++p) std::fill(rows[p].begin(), rows[p].end(), p);
  for (auto [from, to] : l.red) rows[at(from)][kRed] = at(to);
  for (const Edge& e : l.other) rows[at(e.from)][e.letter] = at(e.to);
  return Fixture{l.name, Automaton::from_transitions(n, l.k, rows), l.labels, l.rules};
}

// Red cycle 1 2 3 x y z r 8 with trees 10 9 at 1 and 19 18 at 3.
std::vector<std::pair<const char*, const char*>> eight_cycle(const char* x, const char* y,
                                                             const char* z) {
  return {{"1", "2"}, {"2", "3"}, {"3", x}, {x, y}, {y, z}, {z, "r"}, {"r", "8"}, {"8", "1"},
          {"9", "1"}, {"10", "9"}, {"18", "3"}, {"19", "18"}};
}

template <class V>
V operator+(V a, const V& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Fixture> make() {
  std::vector<Fixture> out;
  const std::vector<std::string> one_to_four{"1", "2", "3", "4"};
  const std::vector<std::vector<State>> graph{{1, 0}, {3, 1}, {0, 2}, {2, 3}};
  out.push_back({"fig1_graph", Automaton::from_transitions(4, 2, graph), one_to_four, {}});
  out.push_back({"fig1_left", Automaton::from_transitions(4, 2, graph), one_to_four, {}});
  out.push_back({"fig1_right",
                 Automaton::from_transitions(4, 2, {{1, 0}, {3, 1}, {2, 0}, {2, 3}}),
                 one_to_four, {}});

  // Maximal states, and states that become maximal after the flips, get a b-edge
  // to their red successor or root instead of a loop. Every leaf gets one
  // incoming b-edge so that the graph stays strongly connected.
  out.push_back(build({
      "fig2_left",
      2,
      {"r", "8", "1", "2", "3", "t1", "5", "s0", "9", "10", "s1", "p1", "s2", "p2", "15", "16",
       "17", "18", "19"},
      eight_cycle("t1", "5", "s0") + std::vector<std::pair<const char*, const char*>>{
                                    {"s2", "r"}, {"p2", "s2"}, {"s1", "r"}, {"p1", "s1"},
                                    {"15", "5"}, {"16", "15"}, {"17", "t1"}},
      {{"t1", 1, "p1"}, {"s0", 1, "p2"}, {"8", 1, "10"}, {"3", 1, "19"}, {"2", 1, "16"},
       {"r", 1, "17"}, {"10", 1, "1"}, {"p2", 1, "r"}, {"p1", 1, "r"}, {"16", 1, "5"},
       {"19", 1, "3"}},
      {"case1"},
  }));

  const std::vector<std::pair<const char*, const char*>> fig34 =
      eight_cycle("t1", "5", "t2") + std::vector<std::pair<const char*, const char*>>{
                                    {"s2", "r"}, {"p2", "s2"}, {"s1", "r"}, {"p1", "s1"},
                                    {"17", "t1"}, {"22", "17"}, {"20", "t2"}, {"21", "r"}};
  const std::vector<Edge> fig34_other{
      {"t1", 1, "p1"}, {"t2", 1, "p2"}, {"8", 1, "10"}, {"2", 1, "19"}, {"3", 1, "22"},
      {"r", 1, "21"},  {"1", 1, "20"},  {"10", 1, "1"}, {"p2", 1, "r"}, {"p1", 1, "r"},
      {"22", 1, "t1"}, {"19", 1, "3"}};
  const std::vector<std::string> fig34_labels{"r",  "8",  "1",  "2",  "3",  "t1", "5",  "t2",
                                              "9",  "10", "s1", "p1", "s2", "p2", "17", "22",
                                              "18", "19", "20", "21"};
  out.push_back(build({
      "fig3_left",
      2,
      fig34_labels + std::vector<std::string>{"15"},
      fig34 + std::vector<std::pair<const char*, const char*>>{{"15", "5"}},
      fig34_other + std::vector<Edge>{{"5", 1, "15"}},
      {"case2_first"},
  }));
  out.push_back(build({"fig4_left", 2, fig34_labels, fig34, fig34_other,
                       {"case2_first", "case2_second"}}));

  const std::vector<std::string> fig56_labels{"r",  "8",  "1",  "2",  "3",  "t",  "5",
                                              "s0", "9",  "10", "s1", "p1", "s2", "p2",
                                              "17", "22", "18", "19", "20", "21"};
  const std::vector<std::pair<const char*, const char*>> fig56 =
      eight_cycle("t", "5", "s0") + std::vector<std::pair<const char*, const char*>>{
                                   {"s2", "r"}, {"p2", "s2"}, {"s1", "r"}, {"p1", "s1"},
                                   {"17", "t"}, {"22", "17"}, {"20", "s0"}, {"21", "r"}};
  const std::vector<Edge> fig56_other{
      {"t", 1, "p1"},  {"t", 2, "p2"},  {"8", 1, "10"}, {"2", 1, "19"}, {"3", 1, "22"},
      {"1", 1, "20"},  {"10", 1, "1"},  {"10", 2, "1"}, {"p1", 1, "r"}, {"p1", 2, "r"},
      {"p2", 1, "r"},  {"p2", 2, "r"},  {"22", 1, "t"}, {"22", 2, "t"}, {"19", 1, "3"},
      {"19", 2, "3"}};
  out.push_back(build({
      "fig5_left",
      3,
      fig56_labels,
      fig56,
      fig56_other + std::vector<Edge>{{"s0", 1, "r"}, {"s0", 2, "r"}, {"s1", 1, "21"},
                                      {"5", 1, "s0"}, {"5", 2, "s0"}, {"20", 1, "s0"},
                                      {"20", 2, "s0"}},
      {"children_bunch"},
  }));
  out.push_back(build({
      "fig6_left",
      3,
      fig56_labels,
      fig56,
      fig56_other + std::vector<Edge>{{"s0", 1, "s1"}, {"s0", 2, "r"}, {"r", 1, "21"}},
      {"children_t2", "children_s0"},
  }));

  const std::vector<std::pair<const char*, const char*>> fig78 =
      eight_cycle("6", "t", "s0") + std::vector<std::pair<const char*, const char*>>{
                                        {"s1", "r"}, {"p", "s1"}, {"15", "t"}, {"16", "15"},
                                        {"17", "6"}, {"20", "s0"}};
  out.push_back(build({
      "fig7_left",
      2,
      {"r", "8", "1", "2", "3", "6", "t", "s0", "9", "10", "s1", "p", "15", "16", "17", "18",
       "19", "20", "21"},
      fig78 + std::vector<std::pair<const char*, const char*>>{{"21", "r"}},
      {{"t", 1, "p"}, {"s0", 1, "r"}, {"8", 1, "20"}, {"1", 1, "10"}, {"2", 1, "19"},
       {"3", 1, "16"}, {"r", 1, "17"}, {"6", 1, "21"}, {"10", 1, "1"}, {"p", 1, "r"},
       {"16", 1, "t"}, {"19", 1, "3"}, {"20", 1, "s0"}},
      {"child_bunch"},
  }));
  // Root 1 defers (8, 10) where the drawing flips (8, 9): 9 is not maximal.
  out.push_back(build({
      "fig8_left",
      2,
      {"t", "s0", "r", "8", "1", "2", "3", "6", "9", "10", "s1", "p", "15", "16", "17", "18",
       "19", "20"},
      fig78,
      {{"s0", 1, "p"}, {"8", 1, "10"}, {"2", 1, "19"}, {"6", 1, "15"}, {"3", 1, "16"},
       {"1", 1, "17"}, {"r", 1, "20"}, {"10", 1, "1"}, {"p", 1, "r"}, {"16", 1, "t"},
       {"19", 1, "3"}},
      {"child_defer_s0", "child_defer", "final"},
  }));
  return out;
}

}  // namespace

State Fixture::state(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(Errc::Shape, "no state " + std::string(label) + " in " + name);
  return static_cast<State>(it - labels.begin());
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw Error(Errc::Shape, "unknown fixture " + std::string(name));
}

}  // namespace roadcolor
