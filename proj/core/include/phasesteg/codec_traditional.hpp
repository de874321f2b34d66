#pragma once

#include "phasesteg/audio_clip.hpp"
#include "phasesteg/bits.hpp"
#include "phasesteg/segments.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

// Classic phase coding baseline. The whole message goes into segment 0 and
// every later segment is rebuilt from the modified segment 0 plus the cover's
// original inter-segment phase differences.
namespace phasesteg::traditional {

struct Options {
    /// First bin of the embedded band. Defaults to seg_mid - m, the same
    /// sub-Nyquist band the improved codec uses.
    std::optional<std::size_t> band_start;
};

/// Throws Error{MessageTooLarge} if the band does not fit in (0, seg_mid).
std::size_t resolve_band_start(const StegoParams& params, const Options& options);

EmbedTrace embed_spectra(std::span<const std::int16_t> cover, const BitVector& bits,
                         const Options& options = {});

AudioClip embed(const AudioClip& cover, std::string_view message,
                const Options& options = {});

/// Only segment 0 is transformed.
BitVector extract_bits(std::span<const std::int16_t> stego, std::size_t msg_len_bits,
                       const Options& options = {});

std::string extract(const AudioClip& stego, std::size_t msg_len_bits,
                    const Options& options = {});

} // namespace phasesteg::traditional
