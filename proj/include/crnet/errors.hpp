#pragma once

#include <stdexcept>
#include <string>

namespace crnet {

// Malformed chain orders (empty list, non-positive order, unparsable text).
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Host graph for a branch is disconnected or the attach node is out of range.
class InvalidHost : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Vector/matrix sizes do not agree with the network they are paired with.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A caller broke a precondition that cannot be signalled any other way
// (e.g. a non-symmetric matrix handed to the symmetric eigensolver).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The characteristic-polynomial recursion needs at least two rhombuses.
class UnsupportedOrder : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two computations that must agree did not (root outside (-1,1), quotient
// spectrum disagreeing with the full matrix, integer overflow, ...).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The simulated deviation has hit the round-off floor before enough steps
// were recorded to estimate a rate.
class InsufficientSignal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crnet
