#pragma once

#include <cstdint>
#include <vector>

namespace phasesteg {

/// Mono 16-bit PCM audio. The int16 storage enforces the sample range.
struct AudioClip {
    std::vector<std::int16_t> samples;
    std::uint32_t sample_rate = 44100;

    bool operator==(const AudioClip&) const = default;
};

} // namespace phasesteg
