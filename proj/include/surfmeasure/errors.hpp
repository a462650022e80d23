#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfmeasure {

/// Base of every error raised by the library. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition on a numeric domain failed (e.g. genus < 2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the byte offset when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }
    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// A type invariant was violated while constructing a domain object.
class ValidationError : public Error {
public:
    using Error::Error;
};

class SceneMismatch : public Error {
public:
    using Error::Error;
};

class GraphMismatch : public Error {
public:
    using Error::Error;
};

/// Two submanifolds meet in a region or along a curve.
class DisjointnessViolation : public Error {
public:
    DisjointnessViolation(const std::string& what, std::string witness)
        : Error(what), witness_(std::move(witness))
    {
    }
    /// Id of the shared region or curve.
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

class InconsistentCoorientation : public Error {
public:
    InconsistentCoorientation(const std::string& what, std::string region)
        : Error(what), region_(std::move(region))
    {
    }
    const std::string& region() const noexcept { return region_; }

private:
    std::string region_;
};

/// Both the empty set and the whole surface have empty boundary.
class AmbiguousEmptyBoundary : public Error {
public:
    using Error::Error;
};

class AlternationViolation : public Error {
public:
    using Error::Error;
};

class NotDiskFree : public Error {
public:
    using Error::Error;
};

class EnumerationBudgetExceeded : public Error {
public:
    using Error::Error;
};

class MissingEntry : public Error {
public:
    using Error::Error;
};

/// Weight masses do not sum to one.
class NormalizationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NestingViolation : public ValidationError {
public:
    NestingViolation(const std::string& what, std::size_t index) : ValidationError(what), index_(index) {}
    /// Zero-based index of the first step that is not contained in its successor.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace surfmeasure
