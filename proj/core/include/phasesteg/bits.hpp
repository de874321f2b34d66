#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace phasesteg {

/// Message bits, MSB first within each byte. Elements are 0 or 1.
using BitVector = std::vector<std::uint8_t>;

/// One phase value per bit, each exactly +pi/2 or -pi/2.
using PhaseSymbols = std::vector<double>;

inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Each byte becomes 8 bits, MSB first. Throws Error{EmptyMessage}.
BitVector text_to_bits(std::string_view message);

/// Same, for code points; anything above 255 throws Error{NonByteCharacter}.
BitVector text_to_bits(std::u32string_view message);

/// Throws Error{BadLength} unless bits.size() is a positive multiple of 8.
std::string bits_to_text(const BitVector& bits);

/// 0 -> +pi/2, 1 -> -pi/2.
PhaseSymbols bits_to_phases(const BitVector& bits);

double bit_to_phase(std::uint8_t bit) noexcept;

/// Extraction threshold: a negative phase reads as 1, anything else as 0.
std::uint8_t phase_to_bit(double phase) noexcept;

BitVector phases_to_bits(const PhaseSymbols& phases);

} // namespace phasesteg
