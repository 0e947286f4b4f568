#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace secretary::cli {

/// Runs one subcommand. Results go to `out` (JSON by default, CSV with
/// --format csv), diagnostics to `err`. Returns the process exit status:
/// 0 on success, 1 on numeric failure (e.g. series tolerance not reached),
/// 2 on argument errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace secretary::cli
