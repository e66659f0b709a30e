#pragma once

#include <stdexcept>
#include <string>

namespace mix2mix {

enum class ErrorCode {
    invalid_argument,
    io,
    pose_mismatch,
    decode,
    channel_mismatch,
    degenerate_alpha,
    insufficient_views,
    unknown_backend,
    nonfinite,
    locked,
    internal,
};

const char* error_code_name(ErrorCode code);

// All library failures surface as Error so the C API can map them to codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mix2mix
