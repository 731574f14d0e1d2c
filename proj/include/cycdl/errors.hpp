#pragma once

#include <stdexcept>
#include <string>

namespace cycdl {

// Base class for all library errors surfaced to callers (CLI maps these to
// exit code 1 with a JSON error object).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: bad modulus, unsupported ell, cache too short, ...
class ParamError : public Error {
public:
    using Error::Error;
};

// Unknown named parameter set.
class LookupError : public Error {
public:
    using Error::Error;
};

// p = 2^a*3^b - 1 turned out composite.
class RejectionError : public Error {
public:
    using Error::Error;
};

// Random sampling exhausted its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Neither r1 nor r2 generates the subgroup (corrupted compression tuple).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// A small-subgroup challenge matched no table entry.
class NotInSubgroupError : public Error {
public:
    using Error::Error;
};

// Internal cross-check failed (e.g. non-divisible final digit).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Malformed strategy or out-of-range digit.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace cycdl
