#pragma once

#include <ostream>

namespace arrowgraph {

/// Exit codes: 0 ok, 1 bad flags or unparsable input (also a port that cannot
/// be bound), 2 mathematical errors and failed self-test criteria.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arrowgraph
