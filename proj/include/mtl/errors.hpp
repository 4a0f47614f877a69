#pragma once

#include <stdexcept>
#include <string>

namespace mtl {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (wrong k, mismatched table sizes, malformed specs).
struct ArgumentError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation (pole proximity,
// evaluation point outside the supported region).
struct DomainError : Error {
    using Error::Error;
};

// Argument outside the supported numeric range (x > n_max, |t| too large).
struct RangeError : Error {
    using Error::Error;
};

// Malformed on-disk data: bad magic, bad version, truncation, checksum.
struct FormatError : Error {
    using Error::Error;
};

// Well-formed input that violates a documented constraint (e.g. a zero
// table whose first ordinate is below the zero-free window).
struct ValidationError : Error {
    using Error::Error;
};

// Allocation beyond the configured budget, or filesystem failures.
struct ResourceError : Error {
    using Error::Error;
};

// An iterative numeric scheme failed to reach its target tolerance.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace mtl
