#include "decsau/error.hpp"

namespace decsau {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateKey: return "DegenerateKey";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::MalformedStream: return "MalformedStream";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InconsistentDelta: return "InconsistentDelta";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::MalformedRiff: return "MalformedRiff";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::LengthInconsistency: return "LengthInconsistency";
        case ErrorCode::OracleFailure: return "OracleFailure";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace decsau
