#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpath {

/**
 * Runs one CLI invocation against explicit streams. `args` excludes the
 * program name; `in` backs any input path given as "-". Returns the exit
 * status: 0 on success, 1 for domain errors, 2 for usage errors.
 */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hyperpath
