#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asymbench::cli {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 success, 1 validation/domain error, 2 I/O or parse
// error. Diagnostics go to err; results go to out or to --out files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymbench::cli
