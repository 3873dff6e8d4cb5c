#pragma once

#include <stdexcept>
#include <string>

namespace sptutte {

// Base class for all errors reported by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph document or unparseable number literal.
class ParseError : public Error {
public:
    using Error::Error;
};

// Exact-arithmetic failure (division by zero, inverse of zero).
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// The reduction algebra is undefined at q = 0 (prefactors divide by q).
class InvalidQ : public Error {
public:
    using Error::Error;
};

// A series reduction denominator vanished at the requested q. The replacement
// edge does not exist at this point; callers may retry at another q.
class SingularPoint : public Error {
public:
    explicit SingularPoint(const std::string& what, std::string q_text = {},
                           int source = -1, int sink = -1)
        : Error(what), q_text_(std::move(q_text)), source_(source), sink_(sink) {}

    const std::string& q_text() const { return q_text_; }
    bool has_terminals() const { return source_ >= 0 && sink_ >= 0; }
    int source() const { return source_; }
    int sink() const { return sink_; }

private:
    std::string q_text_;
    int source_;
    int sink_;
};

// Degree-2 reduction got stuck: the input is not two-terminal series-parallel.
class NotSeriesParallel : public Error {
public:
    using Error::Error;
};

// Graph is not connected where a connected graph is required.
class Disconnected : public Error {
public:
    using Error::Error;
};

// Instance exceeds a hard enumeration cap (brute force, coloring count).
class TooLarge : public Error {
public:
    using Error::Error;
};

// Not enough nonsingular sample points to reconstruct the polynomial.
class InterpolationFailure : public Error {
public:
    using Error::Error;
};

} // namespace sptutte
