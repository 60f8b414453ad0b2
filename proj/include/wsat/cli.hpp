#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsat::cli {

// Exit codes: 0 success/verified-true, 1 verified-false, 2 usage error,
// 3 budget or internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wsat::cli
