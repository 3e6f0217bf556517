#ifndef CTEXTILE_CLI_HPP
#define CTEXTILE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ctextile::cli {

// Runs one command-line invocation. Output is deterministic for fixed inputs:
// exit code 0 on success, 1 on domain errors (one "error: ..." line on err),
// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ctextile::cli

#endif
