#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcp {

// Base for all library errors. The CLI maps each subclass to its own exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (bad argument, empty input, ...).
struct UsageError : Error {
    using Error::Error;
};

// A scaled measurement does not fit the 16-bit value range.
struct OutOfRange : Error {
    using Error::Error;
};

// Bit stream or file ended before the decoder was done.
struct TruncatedStream : Error {
    using Error::Error;
};

// Structurally invalid stream or file contents.
struct CorruptStream : Error {
    using Error::Error;
};

// Input is not an LCP container.
struct BadMagic : Error {
    using Error::Error;
};

// Container version newer than this build understands.
struct UnsupportedVersion : Error {
    using Error::Error;
};

// CSV cell or row could not be parsed; carries the 1-based row and column.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t row, std::size_t column)
        : Error(msg), row(row), column(column) {}

    std::size_t row;
    std::size_t column;
};

// Filesystem-level failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace lcp
