#include "roadcolor/dot.hpp"

#include <sstream>

namespace roadcolor {

std::string export_dot(const Document& doc) {
  const bool colored = std::holds_alternative<Automaton>(doc);
  const std::vector<std::vector<State>> rows =
      colored ? std::get<Automaton>(doc).rows() : std::get<Digraph>(doc).rows();
  std::ostringstream out;
  out << "digraph " << (colored ? "automaton" : "graph") << " {\n";
  out << "  node [shape=circle];\n";
  for (State p = 0; p < rows.size(); ++p) out << "  " << p << ";\n";
  for (State p = 0; p < rows.size(); ++p) {
    for (Letter a = 0; a < rows[p].size(); ++a) {
      out << "  " << p << " -> " << rows[p][a] << " [label=\"" << a << "\"";
      if (colored) out << (a == kRed ? ", color=red, style=bold" : ", style=dashed");
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace roadcolor
