#include "phasesteg/codec_improved.hpp"

#include "phasesteg/error.hpp"

#include <string>

namespace phasesteg::improved {

EmbedTrace embed_spectra(std::span<const std::int16_t> cover, const BitVector& bits)
{
    EmbedTrace trace;
    trace.params = derive_params(bits.size(), cover.size());
    const auto& params = trace.params;
    const FftPlan plan(params.seg_len);

    trace.cover = analyze_segments(cover, params, plan);
    trace.stego = trace.cover;

    const PhaseSymbols symbols = bits_to_phases(bits);
    const std::span<const double> all(symbols);
    for (std::size_t i = 0; i < params.seg_num; ++i) {
        const BitRange range = segment_bit_range(i, params);
        if (range.empty()) {
            continue;
        }
        // Band ends just below seg_mid; the mirror lands at seg_mid + 1 ...
        write_phase_band(trace.stego[i], params.seg_mid - range.size(),
                         all.subspan(range.start, range.size()));
    }
    return trace;
}

AudioClip embed(const AudioClip& cover, std::string_view message)
{
    const BitVector bits = text_to_bits(message);
    const EmbedTrace trace = embed_spectra(cover.samples, bits);
    const FftPlan plan(trace.params.seg_len);
    return {quantize(synthesize_segments(trace.stego, plan)), cover.sample_rate};
}

BitVector extract_bits(std::span<const std::int16_t> stego, std::size_t msg_len_bits)
{
    const StegoParams params = derive_params(msg_len_bits, stego.size());
    const FftPlan plan(params.seg_len);

    BitVector bits;
    bits.reserve(msg_len_bits);
    for (std::size_t i = 0; i < params.seg_num; ++i) {
        const BitRange range = segment_bit_range(i, params);
        if (range.empty()) {
            continue;
        }
        const Spectrum spectrum = analyze_segment(stego, params, plan, i);
        read_phase_band(spectrum, params.seg_mid - range.size(), range.size(), bits);
    }
    bits.resize(msg_len_bits);
    return bits;
}

std::string extract(const AudioClip& stego, std::size_t msg_len_bits)
{
    if (msg_len_bits == 0 || msg_len_bits % 8 != 0) {
        throw Error(ErrorCode::BadLength, "message length " + std::to_string(msg_len_bits) +
                                              " bits is not a positive multiple of 8");
    }
    return bits_to_text(extract_bits(stego.samples, msg_len_bits));
}

} // namespace phasesteg::improved
