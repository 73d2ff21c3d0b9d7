#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace splitlab {

/// Malformed or inconsistent input (dimension mismatch, non-unimodular map, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its contract (f not interior, unbounded set, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a set that must be lattice-free has an integer point in its interior.
class LatticeFreeError : public PreconditionError {
public:
    LatticeFreeError(const std::string& what, std::vector<mpq_class> witness)
        : PreconditionError(what), witness_(std::move(witness)) {}

    const std::vector<mpq_class>& witness() const noexcept { return witness_; }

private:
    std::vector<mpq_class> witness_;
};

}  // namespace splitlab
