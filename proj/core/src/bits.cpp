#include "phasesteg/bits.hpp"

#include "phasesteg/error.hpp"

#include <string>

namespace phasesteg {

namespace {

void append_byte(BitVector& bits, unsigned byte)
{
    for (int b = 7; b >= 0; --b) {
        bits.push_back(static_cast<std::uint8_t>((byte >> b) & 1u));
    }
}

} // namespace

BitVector text_to_bits(std::string_view message)
{
    if (message.empty()) {
        throw Error(ErrorCode::EmptyMessage, "message is empty");
    }
    BitVector bits;
    bits.reserve(message.size() * 8);
    for (const char c : message) {
        append_byte(bits, static_cast<unsigned char>(c));
    }
    return bits;
}

BitVector text_to_bits(std::u32string_view message)
{
    if (message.empty()) {
        throw Error(ErrorCode::EmptyMessage, "message is empty");
    }
    BitVector bits;
    bits.reserve(message.size() * 8);
    for (std::size_t i = 0; i < message.size(); ++i) {
        const char32_t c = message[i];
        if (c > 0xFF) {
            throw Error(ErrorCode::NonByteCharacter,
                        "character at index " + std::to_string(i) + " (U+" +
                            std::to_string(static_cast<std::uint32_t>(c)) +
                            ") does not fit in 8 bits");
        }
        append_byte(bits, static_cast<unsigned>(c));
    }
    return bits;
}

std::string bits_to_text(const BitVector& bits)
{
    if (bits.empty() || bits.size() % 8 != 0) {
        throw Error(ErrorCode::BadLength,
                    "bit count " + std::to_string(bits.size()) + " is not a positive multiple of 8");
    }
    std::string text;
    text.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned byte = 0;
        for (std::size_t b = 0; b < 8; ++b) {
            byte = (byte << 1) | (bits[i + b] & 1u);
        }
        text.push_back(static_cast<char>(byte));
    }
    return text;
}

double bit_to_phase(std::uint8_t bit) noexcept
{
    return bit == 0 ? kHalfPi : -kHalfPi;
}

std::uint8_t phase_to_bit(double phase) noexcept
{
    return phase < 0.0 ? 1 : 0;
}

PhaseSymbols bits_to_phases(const BitVector& bits)
{
    PhaseSymbols out;
    out.reserve(bits.size());
    for (const auto b : bits) {
        out.push_back(bit_to_phase(b));
    }
    return out;
}

BitVector phases_to_bits(const PhaseSymbols& phases)
{
    BitVector out;
    out.reserve(phases.size());
    for (const double p : phases) {
        out.push_back(phase_to_bit(p));
    }
    return out;
}

} // namespace phasesteg
