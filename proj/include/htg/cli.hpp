#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htg::cli {

// Exit codes: 0 success (all Match), 1 any Mismatch or counterexample,
// 2 usage or validation error, 3 Inconclusive present.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace htg::cli
