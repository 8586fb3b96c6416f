#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbase {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite explicit sequence was queried past its last index.
struct IndexBeyondExplicitList : Error {
    using Error::Error;
};

// An index precondition (such as k <= n) does not hold.
struct InvalidRange : Error {
    using Error::Error;
};

// A digit exceeds the radix of its position.
struct DigitOutOfRange : Error {
    std::size_t position;
    DigitOutOfRange(std::size_t pos, const std::string& msg) : Error(msg), position(pos) {}
};

// The value cannot be represented: the radices stop growing (or the
// sequence runs out) before the digit expansion terminates.
struct NonRepresentable : Error {
    using Error::Error;
};

struct OriginMismatch : Error {
    using Error::Error;
};

struct SequenceMismatch : Error {
    using Error::Error;
};

// Text input does not match the expected grammar; position is a byte
// offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg) : Error(msg), position(pos) {}
};

// Two values that must live in the same ambient box (or have the same
// dimension count) do not.
struct AmbientMismatch : Error {
    using Error::Error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct NonDivisible : Error {
    using Error::Error;
};

// A search was asked to run on a box larger than its configured guard.
struct SearchLimitExceeded : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

// A sequence spec string does not match the spec grammar or carries an
// invalid parameter.
struct InvalidSequenceSpec : Error {
    using Error::Error;
};

} // namespace fbase
