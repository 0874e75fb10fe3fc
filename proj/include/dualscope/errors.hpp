// errors.hpp
// Distinct error types so the CLI can map failures to exit codes
// (argument errors -> 2, exceeded budgets -> 3).

#pragma once

#include <stdexcept>
#include <string>

namespace dualscope {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ProfileNotClassConstant : std::runtime_error {
    explicit ProfileNotClassConstant(const std::string& what) : std::runtime_error(what) {}
};

struct NotADualPair : std::runtime_error {
    explicit NotADualPair(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dualscope
