#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfqkd::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_pipeline = 3,
    exit_zero_key = 4,  // keyrate mode only
};

/// `args` excludes the program name:
///   <mode> --config <path> [--out <dir>] [--seed <u64>] [--distance-km <f>]
///          [--n-sent <f>] [--scenario <name>] [--theta-a <0|pi/2|pi>]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfqkd::cli
