#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cplx::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 budget exhausted (unknown).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cplx::cli
