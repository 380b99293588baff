#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spg
{
    enum class ExitStatus : int
    {
        Ok = 0,
        Violation = 1,
        Usage = 2,
        Exhausted = 3
    };

    /// Runs spgtool with `args` (program name excluded). Documents are read
    /// from `in` when --input is absent or "-".
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
