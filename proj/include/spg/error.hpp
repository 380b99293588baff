#pragma once

#include <stdexcept>
#include <string>

namespace spg
{
    /// Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A caller passed an argument outside an operation's domain.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// An enumeration would exceed its configured work budget.
    class BudgetExceeded : public Error
    {
    public:
        BudgetExceeded(const std::string & what, unsigned long long required, unsigned long long budget) :
            Error(what + " (requires " + std::to_string(required) + " checks, budget " + std::to_string(budget) + ")"),
            required(required),
            budget(budget)
        {
        }

        unsigned long long required;
        unsigned long long budget;
    };
}
