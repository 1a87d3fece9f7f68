#pragma once

#include <stdexcept>

namespace mpecalc {

// Malformed call: empty list, missing optional input, bad count.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs are individually valid but the formula is undefined or its result
// leaves [0, 1] (e.g. P(E_EXT) < P(H) for an implication case).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A denominator is exactly zero.
class DivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact enumeration asked for more events than it can hold.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace mpecalc
