#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgood::cli
{
    enum ExitCode
    {
        exit_decided = 0,
        exit_negative = 1, // not good, a witness colouring, or no embedding
        exit_parse = 2,
        exit_undecided = 3,
        exit_precondition = 4,
        exit_internal = 5
    };

    // Runs one command line (argv[0] is the program name). The JSON report goes to `out`,
    // error text to `err`.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
