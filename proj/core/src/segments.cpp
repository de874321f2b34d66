#include "phasesteg/segments.hpp"

#include "phasesteg/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace phasesteg {

StegoParams derive_params(std::size_t msg_len_bits, std::size_t cover_len)
{
    if (msg_len_bits == 0) {
        throw Error(ErrorCode::EmptyMessage, "message has no bits");
    }
    // seg_len >= 4 * msg_len_bits, so this bounds every intermediate below.
    if (msg_len_bits > kMaxSegmentLength / 4) {
        throw Error(ErrorCode::MessageTooLarge,
                    "message of " + std::to_string(msg_len_bits) + " bits needs a segment longer than " +
                        std::to_string(kMaxSegmentLength));
    }
    std::size_t pow2 = 1;
    while (pow2 < 2 * msg_len_bits) {
        pow2 <<= 1;
    }

    StegoParams p;
    p.msg_len_bits = msg_len_bits;
    p.seg_len = 2 * pow2;
    if (p.seg_len > kMaxSegmentLength) {
        throw Error(ErrorCode::MessageTooLarge,
                    "segment length " + std::to_string(p.seg_len) + " exceeds " +
                        std::to_string(kMaxSegmentLength));
    }
    p.seg_mid = p.seg_len / 2;
    p.seg_num = std::max<std::size_t>(1, (cover_len + p.seg_len - 1) / p.seg_len);
    p.padded_len = p.seg_num * p.seg_len;
    return p;
}

BitRange segment_bit_range(std::size_t segment, const StegoParams& params)
{
    const std::size_t m = params.msg_len_bits;
    const std::size_t n = params.seg_num;
    return {segment * m / n, (segment + 1) * m / n};
}

Spectrum analyze_segment(std::span<const std::int16_t> samples, const StegoParams& params,
                         const FftPlan& plan, std::size_t segment)
{
    std::vector<double> buffer(params.seg_len, 0.0);
    const std::size_t begin = segment * params.seg_len;
    for (std::size_t t = 0; t < params.seg_len && begin + t < samples.size(); ++t) {
        buffer[t] = static_cast<double>(samples[begin + t]);
    }
    return plan.analyze(buffer);
}

std::vector<Spectrum> analyze_segments(std::span<const std::int16_t> samples,
                                       const StegoParams& params,
                                       const FftPlan& plan)
{
    std::vector<Spectrum> spectra;
    spectra.reserve(params.seg_num);
    for (std::size_t i = 0; i < params.seg_num; ++i) {
        spectra.push_back(analyze_segment(samples, params, plan, i));
    }
    return spectra;
}

std::vector<double> synthesize_segments(const std::vector<Spectrum>& spectra,
                                        const FftPlan& plan)
{
    std::vector<double> out;
    out.reserve(spectra.size() * plan.size());
    for (const auto& spectrum : spectra) {
        const auto segment = plan.synthesize(spectrum);
        out.insert(out.end(), segment.begin(), segment.end());
    }
    return out;
}

std::vector<std::int16_t> quantize(std::span<const double> samples)
{
    constexpr double lo = std::numeric_limits<std::int16_t>::min();
    constexpr double hi = std::numeric_limits<std::int16_t>::max();
    std::vector<std::int16_t> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out[i] = static_cast<std::int16_t>(std::clamp(std::round(samples[i]), lo, hi));
    }
    return out;
}

void write_phase_band(Spectrum& spectrum, std::size_t first_bin,
                      std::span<const double> symbols)
{
    const std::size_t l = spectrum.size();
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        const std::size_t bin = first_bin + j;
        spectrum.phases[bin] = symbols[j];
        spectrum.phases[l - bin] = -symbols[j];
    }
}

void read_phase_band(const Spectrum& spectrum, std::size_t first_bin,
                     std::size_t count, BitVector& out)
{
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(phase_to_bit(spectrum.phases[first_bin + j]));
    }
}

} // namespace phasesteg
