#pragma once

#include <stdexcept>
#include <string>

namespace cyclorient {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. line() is 1-based; 0 when no line is known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : Error(annotate(message, line)), line_(line) {}

    int line() const noexcept { return line_; }

private:
    static std::string annotate(const std::string& message, int line) {
        if (line > 0) return "line " + std::to_string(line) + ": " + message;
        return message;
    }

    int line_ = 0;
};

/// An edge {v,v} was given.
class SelfLoopError : public ParseError {
public:
    using ParseError::ParseError;
};

/// The same edge appeared twice while strict parsing was on.
class DuplicateEdgeError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A vertex id outside the graph's range was referenced.
class UnknownVertexError : public Error {
public:
    using Error::Error;
};

/// An orientation does not cover every edge of the graph it is used with,
/// or covers edges the graph does not have.
class PartialOrientationError : public Error {
public:
    using Error::Error;
};

/// A component handed to a per-component procedure is not two-connected.
class NotTwoConnectedError : public Error {
public:
    using Error::Error;
};

/// An exhaustive procedure was asked to run beyond its configured cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Generator parameters outside the documented range.
class BadParamsError : public Error {
public:
    using Error::Error;
};

/// The base graph is complete; no non-edge can be added.
class CompleteGraphError : public Error {
public:
    using Error::Error;
};

} // namespace cyclorient
