#pragma once

#include <stdexcept>
#include <string>

namespace gg {

// Base class for everything thrown by the library. Subclasses distinguish
// bad parameters from arithmetic/numeric trouble so the CLI can map them to
// distinct exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: bad modulus, bad divisor, coprimality violation,
// out-of-range index, malformed rational, and the like.
struct ParamError : Error {
    explicit ParamError(const std::string& what) : Error(what) {}
};

// A checked 64-bit operation would have wrapped.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// Laurent polynomial evaluated at 0 with negative exponents present.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Root-of-unity evaluation requested above the configured cap.
struct CapError : Error {
    explicit CapError(const std::string& what) : Error(what) {}
};

// Floating-point consistency check failed (imaginary residue too large).
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(what) {}
};

// Signature of the wrong sign: the caller should reverse orientation.
struct OrientationError : Error {
    explicit OrientationError(const std::string& what) : Error(what) {}
};

} // namespace gg
