#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace radloc {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Geometry degenerated below the representable threshold
// (e.g. coincident circle centers: no radical line exists).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

// Requested a construction that needs properly intersecting circles.
class NoIntersectionError : public Error {
public:
    using Error::Error;
};

// An aggregate metric is undefined for the given inputs
// (e.g. no localized sensor in any trial).
class MetricUndefinedError : public Error {
public:
    using Error::Error;
};

// A config document or override failed validation; carries the field name.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Filesystem / output failures.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace radloc
