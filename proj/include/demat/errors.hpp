#pragma once

#include <stdexcept>
#include <string>

namespace demat {

/// Thrown when an argument is non-finite or otherwise unusable as given.
class InvalidArgumentError : public std::invalid_argument {
public:
    explicit InvalidArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Thrown when a value lies outside the mathematical domain of an operation,
/// e.g. a nonpositive level that would have to be log-transformed.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Series observations violate ordering requirements (duplicate or decreasing years).
class MalformedSeriesError : public std::runtime_error {
public:
    explicit MalformedSeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularDenominatorError : public std::runtime_error {
public:
    explicit SingularDenominatorError(const std::string& msg) : std::runtime_error(msg) {}
};

class NoOverlapError : public std::runtime_error {
public:
    explicit NoOverlapError(const std::string& msg) : std::runtime_error(msg) {}
};

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure while reading a delimited input file; carries the 1-based line number
/// (0 when the failure is not tied to a particular line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class ReportError : public std::runtime_error {
public:
    explicit ReportError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace demat
