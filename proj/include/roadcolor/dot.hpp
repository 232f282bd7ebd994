#pragma once

#include <string>

#include "roadcolor/document.hpp"

namespace roadcolor {

/// One edge per slot labeled with its letter. For an automaton letter 0 is red
/// and bold and the other letters are dashed.
std::string export_dot(const Document& doc);

}  // namespace roadcolor
