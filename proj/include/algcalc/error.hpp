#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          message_(message), position_(position) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Shape or index errors: mismatched ranks, out-of-range indices, wrong arity.
class DimensionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Denominator vanishes at an evaluation point; callers should resample.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Generators of a subbundle are linearly dependent over the function field.
class RankDeficiency : public Error {
public:
    using Error::Error;
};

} // namespace algcalc
