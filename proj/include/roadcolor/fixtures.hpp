#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roadcolor/automaton.hpp"

namespace roadcolor {

/// A hand-built instance. `labels[i]` is the name state i carries in the drawings.
/// `rules` lists the trace tags a search on the automaton is expected to emit.
struct Fixture {
  std::string name;
  Automaton automaton;
  std::vector<std::string> labels;
  std::vector<std::string> rules;

  State state(std::string_view label) const;
};

/// fig1_graph, fig1_left, fig1_right, then fig2_left .. fig8_left.
const std::vector<Fixture>& fixtures();

/// Throws Shape for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace roadcolor
