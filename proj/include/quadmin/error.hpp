#pragma once

#include <stdexcept>
#include <string>

namespace quadmin {

// Base for every error this library throws on bad input or unsatisfiable
// requests. Internal invariant violations use InternalError instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSquarefree : Error {
    // square_factor: a prime whose square divides the offending d
    NotSquarefree(unsigned long long d, unsigned long long square_factor)
        : Error("d = " + std::to_string(d) + " is not square-free (divisible by " +
                std::to_string(square_factor) + "^2)"),
          d(d), square_factor(square_factor) {}
    unsigned long long d;
    unsigned long long square_factor;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct InvalidDenominator : Error {
    using Error::Error;
};

struct NotIrrational : Error {
    using Error::Error;
};

struct InvalidCandidate : Error {
    using Error::Error;
};

struct OracleTooLarge : Error {
    using Error::Error;
};

struct NotExceptional : Error {
    using Error::Error;
};

struct DecompositionFailed : Error {
    using Error::Error;
};

struct InvalidModulus : Error {
    using Error::Error;
};

struct NotAResidue : Error {
    using Error::Error;
};

struct RamifiedPrime : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Postcondition failures: these indicate a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace quadmin
