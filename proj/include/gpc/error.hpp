#pragma once

#include <stdexcept>
#include <string>

namespace gpc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string& name)
        : Error("unknown vertex: " + name) {}
};

/// The operation needs a loopless graph.
class LoopError : public Error {
public:
    explicit LoopError(const std::string& what)
        : Error(what + ": graph has a loop") {}
};

/// A construction would exceed the configured vertex cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search ran out of its node budget. The answer is unknown,
/// which is distinct from a refutation.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace gpc
