#pragma once

#include <stdexcept>
#include <string>

namespace decsau {

enum class ErrorCode {
    InvalidArgument,
    DegenerateKey,
    DomainError,
    MalformedStream,
    LengthMismatch,
    InconsistentDelta,
    UnsupportedFormat,
    MalformedRiff,
    BadMagic,
    LengthInconsistency,
    OracleFailure,
    Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace decsau
