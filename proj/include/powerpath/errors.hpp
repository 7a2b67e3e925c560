#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerpath {

// Root of every error thrown by the library. The CLI maps each subclass to
// a fixed exit code (see tools/powerpath.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An order cap (graph order, oracle order, canonical-labeling order) was exceeded.
class SizeError : public Error {
public:
    using Error::Error;
};

// Arguments violate an operation's preconditions (bad k/p/a, bad variant index, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed caller input such as an out-of-range vertex id.
class InputError : public Error {
public:
    using Error::Error;
};

// Malformed graph6 text; offset is the byte position of the first bad byte.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    // The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

// A search exhausted its time or node budget before reaching a verdict.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace powerpath
