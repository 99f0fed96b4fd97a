#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (edge lists, graph6, JSON payloads).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// An operation was called outside its contract (isolated vertices,
// wrong-size colorings, non-tree inputs, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A bounded search ran out of its node budget. Distinct from "infeasible":
// a caller that sees this must not report a value.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace tdc
