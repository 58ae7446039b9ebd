#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowmot {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ring elements with different truncation profiles were combined; they live
/// on incompatible ambient varieties.
class ProfileMismatchError : public Error {
public:
    using Error::Error;
};

/// Classes on different varieties were combined.
class VarietyMismatchError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed (exp of a series with nonzero constant
/// term, square root of a non-unipotent element, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Endpoints of correspondences or morphisms do not match; the composition
/// is undefined.
class CompositionError : public Error {
public:
    using Error::Error;
};

/// An object outside the decidable fragment was handed to a decision
/// procedure.
class UnsupportedObjectError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. This signals a bug in the library,
/// not a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Carries the byte offset of the offending token;
/// the message names the token itself.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace chowmot
