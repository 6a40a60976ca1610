#pragma once

#include <ostream>

namespace gwh {

/// Command-line entry point. Writes a JSON document to `out` and returns 0
/// on success, 1 when a verification fails, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwh
