#pragma once

#include <stdexcept>
#include <string>

namespace isac {

/// A value lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configuration is well-formed but violates a constraint.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configuration document could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed in a way that indicates a violated precondition.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace isac
