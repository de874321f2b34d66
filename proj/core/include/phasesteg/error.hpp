#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasesteg {

enum class ErrorCode {
    MalformedContainer,
    UnsupportedFormat,
    IoFailure,
    BadLength,
    EmptyMessage,
    NonByteCharacter,
    MessageTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace phasesteg
