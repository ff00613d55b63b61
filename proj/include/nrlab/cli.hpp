#ifndef NRLAB_CLI_HPP
#define NRLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nrlab::cli {

/// Dispatches one subcommand (ellipse-map, verify, numrange, ratio,
/// domain). Returns 0 on success / all checks passing, 1 when a
/// verification check failed (the report is still printed), 2 on usage
/// errors. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrlab::cli

#endif  // NRLAB_CLI_HPP
