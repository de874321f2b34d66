#pragma once

#include <cstddef>
#include <string_view>

namespace phasesteg {

struct VerificationReport {
    double bit_error_rate = 0.0;
    bool message_accuracy = false;
    std::size_t total_bits = 0;
    std::size_t incorrect_bits = 0;
};

/// Bits are compared over the common prefix only, and the count is divided
/// by the original's bit length. A truncated extraction therefore cannot
/// reach BER 1. Throws Error{EmptyMessage} for an empty original.
VerificationReport verify(std::string_view original, std::string_view extracted);

} // namespace phasesteg
