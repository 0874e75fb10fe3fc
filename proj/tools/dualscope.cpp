// dualscope: exact arithmetic toolkit for formal duality in cyclic groups.
// Thin wrapper; all behavior lives in the library dispatcher.

#include <iostream>
#include <string>
#include <vector>

#include "dualscope/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = dualscope::dispatch(args);
    std::cout << res.output;
    return res.exit_code;
}
