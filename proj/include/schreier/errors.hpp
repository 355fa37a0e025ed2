#pragma once

#include <stdexcept>
#include <string>

namespace schreier {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// diff_multiset on fewer than two entries
struct SizeError : Error {
    using Error::Error;
};

struct NegativePartError : Error {
    using Error::Error;
};

// malformed family query or out-of-range parameter
struct ParamError : Error {
    using Error::Error;
};

// input outside the domain of a map or a type invariant
struct DomainError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

} // namespace schreier
