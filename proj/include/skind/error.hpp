#pragma once

#include <stdexcept>
#include <string>

namespace skind {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, family specs, word-set files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its mathematical hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The eigensolver hit its sweep limit before converging.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace skind
