#pragma once

#include <stdexcept>
#include <string>

namespace blockdiag {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::string tagged(const char* tag, const std::string& msg) {
    if (msg.rfind(tag, 0) == 0) return msg; // already tagged (context rethrow)
    return std::string(tag) + ": " + msg;
}
} // namespace detail

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg)
        : Error(detail::tagged("DimensionError", msg)) {}
};

class NotHermitianError : public Error {
public:
    explicit NotHermitianError(const std::string& msg)
        : Error(detail::tagged("NotHermitianError", msg)) {}
};

class NotUnitaryError : public Error {
public:
    explicit NotUnitaryError(const std::string& msg)
        : Error(detail::tagged("NotUnitaryError", msg)) {}
};

// Requested matrix function would cross the principal-branch cut
// (eigenvalue at or below the positive-definiteness floor, or a unitary
// eigenvalue too close to -1).
class BranchError : public Error {
public:
    explicit BranchError(const std::string& msg)
        : Error(detail::tagged("BranchError", msg)) {}
};

// Energy denominators too small for the perturbative recursions.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& msg)
        : Error(detail::tagged("DegeneracyError", msg)) {}
};

// Eigenvector-to-block assignment has a near-tie and no principled winner.
class GaugeAmbiguityError : public Error {
public:
    explicit GaugeAmbiguityError(const std::string& msg)
        : Error(detail::tagged("GaugeAmbiguityError", msg)) {}
};

// Eigenvector block occupancy does not match the partition block sizes.
class BlockMismatchError : public Error {
public:
    explicit BlockMismatchError(const std::string& msg)
        : Error(detail::tagged("BlockMismatchError", msg)) {}
};

// Series argument does not start with the required constant term.
class NormalizationError : public Error {
public:
    explicit NormalizationError(const std::string& msg)
        : Error(detail::tagged("NormalizationError", msg)) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg)
        : Error(detail::tagged("InsufficientDataError", msg)) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg)
        : Error(detail::tagged("ParseError", msg)) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg)
        : Error(detail::tagged("InternalError", msg)) {}
};

} // namespace blockdiag
