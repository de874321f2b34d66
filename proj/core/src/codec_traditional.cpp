#include "phasesteg/codec_traditional.hpp"

#include "phasesteg/error.hpp"

#include <string>

namespace phasesteg::traditional {

std::size_t resolve_band_start(const StegoParams& params, const Options& options)
{
    const std::size_t m = params.msg_len_bits;
    if (m >= params.seg_mid) {
        throw Error(ErrorCode::MessageTooLarge,
                    std::to_string(m) + " bits do not fit below bin " +
                        std::to_string(params.seg_mid));
    }
    const std::size_t start = options.band_start.value_or(params.seg_mid - m);
    if (start == 0 || start + m > params.seg_mid) {
        throw Error(ErrorCode::MessageTooLarge,
                    "band [" + std::to_string(start) + ", " + std::to_string(start + m) +
                        ") must lie inside (0, " + std::to_string(params.seg_mid) + "]");
    }
    return start;
}

EmbedTrace embed_spectra(std::span<const std::int16_t> cover, const BitVector& bits,
                         const Options& options)
{
    EmbedTrace trace;
    trace.params = derive_params(bits.size(), cover.size());
    const auto& params = trace.params;
    const std::size_t band_start = resolve_band_start(params, options);
    const FftPlan plan(params.seg_len);

    trace.cover = analyze_segments(cover, params, plan);
    trace.stego = trace.cover;

    const PhaseSymbols symbols = bits_to_phases(bits);
    write_phase_band(trace.stego[0], band_start, symbols);

    // phi'_i = phi'_{i-1} + (phi_i - phi_{i-1}) over every bin.
    for (std::size_t i = 1; i < params.seg_num; ++i) {
        auto& phases = trace.stego[i].phases;
        const auto& prev_stego = trace.stego[i - 1].phases;
        const auto& cur_cover = trace.cover[i].phases;
        const auto& prev_cover = trace.cover[i - 1].phases;
        for (std::size_t k = 0; k < params.seg_len; ++k) {
            phases[k] = wrap_phase(prev_stego[k] + (cur_cover[k] - prev_cover[k]));
        }
    }
    return trace;
}

AudioClip embed(const AudioClip& cover, std::string_view message, const Options& options)
{
    const BitVector bits = text_to_bits(message);
    const EmbedTrace trace = embed_spectra(cover.samples, bits, options);
    const FftPlan plan(trace.params.seg_len);
    return {quantize(synthesize_segments(trace.stego, plan)), cover.sample_rate};
}

BitVector extract_bits(std::span<const std::int16_t> stego, std::size_t msg_len_bits,
                       const Options& options)
{
    const StegoParams params = derive_params(msg_len_bits, stego.size());
    const std::size_t band_start = resolve_band_start(params, options);
    const FftPlan plan(params.seg_len);

    BitVector bits;
    bits.reserve(msg_len_bits);
    read_phase_band(analyze_segment(stego, params, plan, 0), band_start, msg_len_bits, bits);
    return bits;
}

std::string extract(const AudioClip& stego, std::size_t msg_len_bits, const Options& options)
{
    if (msg_len_bits == 0 || msg_len_bits % 8 != 0) {
        throw Error(ErrorCode::BadLength, "message length " + std::to_string(msg_len_bits) +
                                              " bits is not a positive multiple of 8");
    }
    return bits_to_text(extract_bits(stego.samples, msg_len_bits, options));
}

} // namespace phasesteg::traditional
