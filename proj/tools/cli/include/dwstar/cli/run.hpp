#ifndef DWSTAR_CLI_RUN_HPP
#define DWSTAR_CLI_RUN_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace dwstar::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_verification = 3,
};

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace dwstar::cli

#endif
