#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aua {

// Error taxonomy used across the library. Parse errors cover malformed
// input bytes (bad JSON, unbalanced braces); validation errors cover
// well-formed input that violates a domain invariant (month 13, dangling
// institution reference). The CLI maps the kinds to exit codes.
enum class ErrorKind { parse, validation };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::string location, const std::string& message)
        : Error(ErrorKind::parse, location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string location, std::string field, const std::string& message)
        : Error(ErrorKind::validation, compose(location, field, message)),
          location_(std::move(location)),
          field_(std::move(field)) {}

    ValidationError(std::string location, const std::string& message)
        : ValidationError(std::move(location), "", message) {}

    explicit ValidationError(const std::string& message)
        : ValidationError("", "", message) {}

    const std::string& location() const noexcept { return location_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string compose(const std::string& location, const std::string& field,
                               const std::string& message) {
        std::string out;
        if (!location.empty()) out += location + ": ";
        if (!field.empty()) out += field + ": ";
        out += message;
        return out;
    }

    std::string location_;
    std::string field_;
};

// Named error conditions raised by individual operations.

struct InvalidName : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptyAuthorSet : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownGender : ValidationError {
    using ValidationError::ValidationError;
};

struct DegenerateCensus : ValidationError {
    using ValidationError::ValidationError;
};

struct MissingCareerData : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidConfig : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidInput : ValidationError {
    using ValidationError::ValidationError;
};

// Non-fatal findings emitted while parsing (unknown fields, unrecognized
// escapes). Collected so callers can route them to stderr or ignore them.
struct Diagnostic {
    std::string location;
    std::string message;
};

class Diagnostics {
public:
    void warn(std::string location, std::string message) {
        entries_.push_back({std::move(location), std::move(message)});
    }

    const std::vector<Diagnostic>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<Diagnostic> entries_;
};

} // namespace aua
