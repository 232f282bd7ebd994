#pragma once

#include <ostream>

namespace roadcolor {

/// Exit codes: 0 success, 1 verification failure, 2 malformed input,
/// 3 precondition violated.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace roadcolor
