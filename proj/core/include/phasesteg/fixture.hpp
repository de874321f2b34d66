#pragma once

#include "phasesteg/audio_clip.hpp"

#include <cstdint>

namespace phasesteg {

struct FixtureOptions {
    double seconds = 12.0;
    std::uint64_t seed = 1;
    std::uint32_t sample_rate = 44100;
};

/// Deterministic synthetic cover: a few sinusoids over seeded white noise.
/// Identical options give identical samples.
AudioClip make_fixture(const FixtureOptions& options = {});

} // namespace phasesteg
