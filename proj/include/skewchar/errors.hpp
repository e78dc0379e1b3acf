#pragma once

#include <stdexcept>
#include <string>

namespace skewchar {

// Violated operation precondition (shape containment, length bounds, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weyl denominator vanished at the requested point.
struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// involution_step called on a family without crossing or trapped position.
struct NoSite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct ContainmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace skewchar
