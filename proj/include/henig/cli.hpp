#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace henig::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 holds/ok, 1 fails_certified, 2 inconclusive/partial, 3 input error,
// 4 precondition violated, 5 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace henig::cli
