#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lif {

/* Runs the command-line front end on the given arguments (program name
   excluded). Returns the process exit code: 0 on success, 1 when a
   verification table contains a failing row, 2 on usage or parse errors. */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lif
