#pragma once

#include "phasesteg/audio_clip.hpp"
#include "phasesteg/codec.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace phasesteg {

struct SweepRecord {
    Codec codec = Codec::improved;
    std::size_t message_chars = 0;
    std::size_t message_bits = 0;
    double ber = 0.0;
    bool accuracy = false;
};

inline constexpr std::size_t kMaxSweepChars = 128;

/// Embeds "t" repeated n times for n = 1..max_chars, extracts, and scores.
/// Throws Error{BadLength} if max_chars is outside [1, kMaxSweepChars].
std::vector<SweepRecord> ber_sweep(const AudioClip& cover, std::size_t max_chars, Codec codec);

struct PhaseRecord {
    std::size_t segment_index = 0;
    std::size_t bin_index = 0;
    double cover_phase = 0.0;
    double stego_phase = 0.0;
};

enum class DumpMode {
    /// Stego phases read back from the quantized output audio.
    post_quantization,
    /// Stego phases exactly as the codec wrote them.
    pre_quantization,
};

/// One record per (segment, bin) with bin < seg_mid, ordered by segment then
/// bin.
std::vector<PhaseRecord> phase_dump(const AudioClip& cover, std::string_view message,
                                    Codec codec,
                                    DumpMode mode = DumpMode::post_quantization);

/// codec,message_chars,message_bits,ber,accuracy
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

/// segment,bin,cover_phase,stego_phase
void write_phase_csv(std::ostream& out, std::span<const PhaseRecord> records);

} // namespace phasesteg
