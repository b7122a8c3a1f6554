#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harm {

/// A metric is undefined because no attack path reaches the target.
class UnreachableTargetError : public std::runtime_error {
public:
    explicit UnreachableTargetError(const std::string& what) : std::runtime_error(what) {}
};

/// Path enumeration aborted because it would exceed the configured cap.
class PathCapExceededError : public std::runtime_error {
public:
    explicit PathCapExceededError(std::size_t cap)
        : std::runtime_error("attack path enumeration exceeded the cap of " + std::to_string(cap) +
                             " paths"),
          cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// The attack-resistance recursion is undefined: a parallel join met a
/// zero-resistance branch, or the path-restricted graph has no topological
/// order.
class DegenerateResistanceError : public std::runtime_error {
public:
    explicit DegenerateResistanceError(const std::string& what) : std::runtime_error(what) {}
};

/// A file could not be read.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class ParseErrorKind {
    Syntax,         // malformed JSON text
    SchemaVersion,  // unrecognised schema_version
    DuplicateHost,  // a host id declared twice
    DanglingEdge,   // an edge endpoint names no declared node
    MissingField,   // a required field is absent
    BadValue,       // a field has the wrong type or an unusable value
    Validation,     // the parsed model violates a model invariant
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

}  // namespace harm
