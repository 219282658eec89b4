#pragma once

#include <stdexcept>
#include <string>

namespace ismt {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedInput : Error {
    using Error::Error;
};

struct EmptySubset : Error {
    using Error::Error;
};

struct VertexNotInTree : Error {
    using Error::Error;
};

struct EmptyTerminalSet : Error {
    using Error::Error;
};

struct TerminalCapExceeded : Error {
    using Error::Error;
};

struct EmptyCandidateSet : Error {
    using Error::Error;
};

struct NotALeaf : Error {
    using Error::Error;
};

struct DegreeParityViolation : Error {
    using Error::Error;
};

struct InfeasibleInstance : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct SpecInvalid : Error {
    using Error::Error;
};

// Parsing failure with the 1-based line number it was detected on.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace ismt
