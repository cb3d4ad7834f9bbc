#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualfeas::cli {

/// Exit codes: 0 solved (or dual feasible when only phase 1 was requested),
/// 1 usage or I/O error, 2 infeasible or unbounded, 3 iteration cap hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualfeas::cli
