#pragma once

#include <stdexcept>
#include <string>

namespace tendex {

/// Coarse error categories, mirrored one-to-one by the C API status codes.
enum class Status {
    Ok = 0,
    InvalidArgument = 1,
    Io = 2,
    Parse = 3,
    SeriesTooShort = 4,
    RankDeficient = 5,
    Numeric = 6,
};

/// Exception carrying a Status. The message begins with the contract error
/// name (e.g. "NotAnExtremum: ...") so callers and tests can match on it.
class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

} // namespace tendex
