#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphereint::cli {

/// Exit codes: 0 success, 1 domain error (a JSON error report is written to
/// `out`), 2 usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphereint::cli
