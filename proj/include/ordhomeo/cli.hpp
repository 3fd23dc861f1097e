#ifndef ORDHOMEO_CLI_HPP
#define ORDHOMEO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ordhomeo::cli
{

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a domain or
/// precondition error, 2 on malformed input or usage, 3 on a resource cap.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace ordhomeo::cli

#endif // ORDHOMEO_CLI_HPP
