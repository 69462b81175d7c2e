#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace tightframe::cli {

// Exit codes: 0 success, 1 invalid input, 2 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNumerical = 2;

// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace tightframe::cli
