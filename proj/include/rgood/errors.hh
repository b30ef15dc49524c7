#pragma once

#include <stdexcept>
#include <string>

namespace rgood
{
    // Malformed text input (graph6, colouring files, family specs).
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An operation was called outside its domain.
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A certificate produced by the library failed its own re-verification.
    class InternalError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}
