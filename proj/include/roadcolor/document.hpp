#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "roadcolor/automaton.hpp"

namespace roadcolor {

/// An uncolored graph ("adj") or a coloring ("delta", letter 0 first).
using Document = std::variant<Digraph, Automaton>;

/// Throws Parse, Version, Shape.
Document read_document(std::string_view text);

/// One line, keys in the order version, n, k, adj|delta, ending in a newline.
std::string write_document(const Document& doc);

}  // namespace roadcolor
