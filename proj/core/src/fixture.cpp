#include "phasesteg/fixture.hpp"

#include "phasesteg/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace phasesteg {

namespace {

struct Partial {
    double frequency_hz;
    double amplitude;
    double phase;
};

// Tonal bed plus a flat noise floor, mixed to a peak near -1.4 dBFS like
// mastered program material. The noise supplies energy right up to Nyquist,
// where both codecs write.
constexpr std::array<Partial, 5> kPartials{{
    {220.0, 9600.0, 0.0},
    {440.0, 5600.0, 0.7},
    {1000.0, 4000.0, 1.9},
    {3520.0, 2400.0, 2.6},
    {9000.0, 1280.0, 0.3},
}};
constexpr double kNoiseAmplitude = 6400.0;

// std distributions are implementation defined; map raw engine output
// directly so the fixture is byte-identical across standard libraries.
double unit_uniform(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

AudioClip make_fixture(const FixtureOptions& options)
{
    if (options.sample_rate == 0 || !(options.seconds >= 0.0)) {
        throw Error(ErrorCode::BadLength, "fixture needs a positive rate and non-negative duration");
    }
    const auto frames = static_cast<std::size_t>(
        std::llround(options.seconds * static_cast<double>(options.sample_rate)));

    std::mt19937_64 rng(options.seed);
    AudioClip clip;
    clip.sample_rate = options.sample_rate;
    clip.samples.resize(frames);
    const double rate = static_cast<double>(options.sample_rate);
    for (std::size_t t = 0; t < frames; ++t) {
        const double time = static_cast<double>(t) / rate;
        double v = 0.0;
        for (const auto& p : kPartials) {
            v += p.amplitude * std::sin(2.0 * std::numbers::pi * p.frequency_hz * time + p.phase);
        }
        v += kNoiseAmplitude * (2.0 * unit_uniform(rng) - 1.0);
        clip.samples[t] = static_cast<std::int16_t>(std::clamp(std::round(v), -32768.0, 32767.0));
    }
    return clip;
}

} // namespace phasesteg
