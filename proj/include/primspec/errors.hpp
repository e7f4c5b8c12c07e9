#pragma once

#include <stdexcept>
#include <string>

namespace primspec {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a configured resource bound (rank, interval length) was exceeded
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an operation was called outside its domain
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// two independent computations of the same quantity disagree
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace primspec
