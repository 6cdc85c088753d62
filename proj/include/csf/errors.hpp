#pragma once

#include <stdexcept>
#include <string>

namespace csf {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is not a tree: wrong edge count, cycle, or disconnected.
struct NotATreeError : Error {
    using Error::Error;
};

// Vertex labels are not dense 0-based integers (negative, gap, or garbage).
struct BadLabelError : Error {
    using Error::Error;
};

struct EdgeNotFoundError : Error {
    using Error::Error;
};

// Requested order exceeds the configured bound for the operation.
struct OrderTooLargeError : Error {
    using Error::Error;
};

// Named rooted class R_{n,kind} does not exist (e.g. kind 2 with n < 3).
struct InvalidClassError : Error {
    using Error::Error;
};

// Spider spec violates its invariants (2-leg shorter than 3, fewer than 3 legs, ...).
struct InvalidSpecError : Error {
    using Error::Error;
};

// Reduced partition has weight >= tree order, so no largest part can be appended.
struct WeightTooLargeError : Error {
    using Error::Error;
};

// Identity parameter outside the range where the identity is stated.
struct OutOfRangeError : Error {
    using Error::Error;
};

// A linear system over the coefficients has no nonnegative integer solution;
// the input cannot be the coefficient map of a tree of the promised kind.
struct InconsistentError : Error {
    using Error::Error;
};

struct NotASpiderSignatureError : Error {
    using Error::Error;
};

struct NotATwoSpiderError : Error {
    using Error::Error;
};

struct CacheCorruptError : Error {
    using Error::Error;
};

// Exact count arithmetic would exceed 64 bits.
struct OverflowError : Error {
    using Error::Error;
};

// Malformed external input (tree file, coefficient JSON, spider spec string).
struct FormatError : Error {
    using Error::Error;
};

}  // namespace csf
