// cli.hpp
// Command dispatcher behind the dualscope binary. Kept in the library so
// tests can drive subcommands in-process and assert on exit codes and
// byte-exact output.

#pragma once

#include <string>
#include <vector>

namespace dualscope {

struct DispatchResult {
    int exit_code = 0;
    std::string output;  // what the binary prints on stdout
};

// argv without the program name, e.g. {"check", "--n", "4", "--t", "0,1", "--s", "0,1"}.
// Exit codes: 0 success, 2 argument/domain error, 3 budget exceeded, 1 other.
DispatchResult dispatch(const std::vector<std::string>& args);

}  // namespace dualscope
