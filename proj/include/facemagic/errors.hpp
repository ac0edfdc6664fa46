#pragma once

#include <stdexcept>
#include <string>

namespace facemagic {

/// Bad input data: non-bijective label arrays, out-of-range factors,
/// illegal symmetries, parity violations.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural identity that should hold (given the preconditions)
/// failed; the message names the first failing identity.
class StructureViolation : public std::runtime_error {
public:
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed document text (bad header, wrong row length, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace facemagic
