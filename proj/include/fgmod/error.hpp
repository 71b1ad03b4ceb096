#pragma once

#include <stdexcept>
#include <string>

namespace fgmod {

enum class ErrorCode {
    EmptyGeneratorList,
    DimensionMismatch,
    RingMismatch,
    AmbientMismatch,
    NotWellDefined,
    FreePartNotSupported,
    NonStabilizing,
    InfiniteModule,
    UnsupportedShape,
    UnknownClaim,
    ParseError,
    InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::FreePartNotSupported: return "FreePartNotSupported";
    case ErrorCode::NonStabilizing: return "NonStabilizing";
    case ErrorCode::InfiniteModule: return "InfiniteModule";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fgmod
