#pragma once

#include <stdexcept>
#include <string>

namespace tww {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation on caller-supplied data (bad sets, bad cuts, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Contraction of a dead, duplicate or out-of-range part-id.
class InvalidContraction : public Error {
public:
    using Error::Error;
};

/// A sequence could not be replayed; step is the 1-based index of the bad line.
class SequenceError : public Error {
public:
    SequenceError(int step, const std::string& reason)
        : Error("step " + std::to_string(step) + ": " + reason), step_(step)
    {
    }
    [[nodiscard]] int step() const noexcept { return step_; }

private:
    int step_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line)
    {
    }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

/// An exhaustive routine was asked for an instance beyond its size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A sequence handed to an algorithm exceeds the width the algorithm was promised.
class WidthExceeded : public Error {
public:
    using Error::Error;
};

/// bd_to_sequence found no same-neighborhood pair: the decomposition is wider than claimed.
class DecompositionWidthExceeded : public Error {
public:
    using Error::Error;
};

} // namespace tww
