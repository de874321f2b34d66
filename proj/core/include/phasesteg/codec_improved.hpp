#pragma once

#include "phasesteg/audio_clip.hpp"
#include "phasesteg/bits.hpp"
#include "phasesteg/segments.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

// Distributed phase coding: every segment carries its own slice of the
// message in the bins just below seg_mid, and each segment's phase is
// updated in place with no inter-segment phase bookkeeping.
namespace phasesteg::improved {

/// Phase writes for every segment, without the inverse transform.
EmbedTrace embed_spectra(std::span<const std::int16_t> cover, const BitVector& bits);

/// Output length is params.padded_len; sample rate is preserved.
/// Throws Error{EmptyMessage} or Error{MessageTooLarge}.
AudioClip embed(const AudioClip& cover, std::string_view message);

/// Reads msg_len_bits bits using the same geometry as embed. The supplied
/// length must match the embedded one; a mismatch yields garbage, not an
/// error.
BitVector extract_bits(std::span<const std::int16_t> stego, std::size_t msg_len_bits);

/// Throws Error{BadLength} unless msg_len_bits is a positive multiple of 8.
std::string extract(const AudioClip& stego, std::size_t msg_len_bits);

} // namespace phasesteg::improved
