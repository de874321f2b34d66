#include "phasesteg/error.hpp"

namespace phasesteg {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MalformedContainer: return "MalformedContainer";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::EmptyMessage: return "EmptyMessage";
    case ErrorCode::NonByteCharacter: return "NonByteCharacter";
    case ErrorCode::MessageTooLarge: return "MessageTooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code)
{
}

} // namespace phasesteg
