#pragma once

#include <stdexcept>
#include <string>

namespace grasscoh {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is outside its documented range (bad k, partition outside box, ...).
class range_error : public error {
public:
    using error::error;
};

/// Operand shapes are incompatible (variable counts, mismatched descriptors).
class shape_error : public error {
public:
    using error::error;
};

/// A documented precondition does not hold (non-invariant input, wrong mode).
class precondition_error : public error {
public:
    using error::error;
};

/// The requested case/mode is not part of the catalog.
class unsupported_case_error : public error {
public:
    using error::error;
};

/// An internal consistency check failed. These are always bugs or broken data,
/// never user errors.
class invariant_violation : public error {
public:
    using error::error;
};

/// A name was not found in the registry; carries a suggestion when one exists.
class lookup_error : public error {
public:
    lookup_error(const std::string& what, std::string suggestion_ = {})
        : error(what), suggestion(std::move(suggestion_)) {}
    std::string suggestion;
};

/// Text could not be parsed (polynomials, rationals, partitions).
class parse_error : public error {
public:
    using error::error;
};

}  // namespace grasscoh
