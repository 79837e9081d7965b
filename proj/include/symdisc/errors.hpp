#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error {
    using Error::Error;
};

struct UnsupportedArgument : Error {
    using Error::Error;
};

struct GradeError : Error {
    using Error::Error;
};

struct DivZero : Error {
    using Error::Error;
};

struct DegenerateFamily : Error {
    using Error::Error;
};

struct DegenerateParameter : Error {
    using Error::Error;
};

struct ParityError : Error {
    using Error::Error;
};

struct NonTerminating : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace symdisc
