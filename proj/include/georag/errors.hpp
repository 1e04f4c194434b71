#pragma once

#include <stdexcept>
#include <string>

namespace georag {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (corpus lines, benchmark files, config files).
/// Carries a line number when the source is line-oriented (0 = not applicable).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, size_t line = 0) : Error(msg), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

/// HTTP / connection failure talking to a remote provider. Retryable unless
/// the response indicates a permanent client error.
class TransportError : public Error {
public:
    TransportError(const std::string& msg, int http_status, bool retryable)
        : Error(msg), http_status_(http_status), retryable_(retryable) {}
    int http_status() const { return http_status_; }
    bool retryable() const { return retryable_; }

private:
    int http_status_;
    bool retryable_;
};

/// Persistence file carries a format version newer than this build understands.
class VersionError : public Error {
public:
    explicit VersionError(const std::string& msg) : Error(msg) {}
};

/// Persistence file failed integrity verification (truncation, corruption).
class ChecksumError : public Error {
public:
    explicit ChecksumError(const std::string& msg) : Error(msg) {}
};

} // namespace georag
