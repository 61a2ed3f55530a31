#pragma once

#include <stdexcept>
#include <string>

namespace strongcolor {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph / partition / coloring / tripartite files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments violating its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The solver was asked for a regime outside its guarantee
/// (more than three blocks, or block size below twice the max degree).
class UnsupportedRegime : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Tripartite instance fails the minimum cross-degree threshold.
class DegreeTooLow : public PreconditionError {
public:
    DegreeTooLow(const std::string& msg, int witness_vertex)
        : PreconditionError(msg), witness(witness_vertex)
    {
    }
    int witness;
};

/// An exact-search budget (vertex cap, partition cap, node cap) was hit.
class ResourceExceeded : public Error {
public:
    using Error::Error;
};

/// A state the underlying counting arguments rule out was reached.
/// Indicates an implementation bug or a violated precondition; carries a
/// machine-readable dump of the solver state for triage.
class InternalContradiction : public Error {
public:
    InternalContradiction(const std::string& msg, std::string state_dump)
        : Error(msg + "\n" + state_dump), dump(std::move(state_dump))
    {
    }
    std::string dump;
};

} // namespace strongcolor
