#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid mathematical input: non-dominant weight, mismatched lengths,
/// violated precondition, lookup outside a declared window.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Checked 64-bit arithmetic overflowed. Never wrapped silently.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A configurable resource cap was exceeded (plethysm enumeration size,
/// string-summation horizon). Distinct from a mathematical refutation.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// The implementation refuted itself: two routes disagree, a quantity that
/// must be a multiplicity came out negative, a uniqueness claim failed.
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(what) {}
};

} // namespace veronese
