#include "phasesteg/metrics.hpp"

#include "phasesteg/bits.hpp"
#include "phasesteg/error.hpp"

#include <algorithm>

namespace phasesteg {

VerificationReport verify(std::string_view original, std::string_view extracted)
{
    if (original.empty()) {
        throw Error(ErrorCode::EmptyMessage, "original message is empty");
    }
    const BitVector expected = text_to_bits(original);
    const BitVector actual = extracted.empty() ? BitVector{} : text_to_bits(extracted);

    VerificationReport report;
    report.total_bits = expected.size();
    const std::size_t common = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (expected[i] != actual[i]) {
            ++report.incorrect_bits;
        }
    }
    report.bit_error_rate =
        static_cast<double>(report.incorrect_bits) / static_cast<double>(report.total_bits);
    report.message_accuracy = original == extracted;
    return report;
}

} // namespace phasesteg
