#include "phasesteg/experiments.hpp"

#include "phasesteg/dft.hpp"
#include "phasesteg/error.hpp"
#include "phasesteg/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <string>

namespace phasesteg {

std::vector<SweepRecord> ber_sweep(const AudioClip& cover, std::size_t max_chars, Codec codec)
{
    if (max_chars < 1 || max_chars > kMaxSweepChars) {
        throw Error(ErrorCode::BadLength, "sweep length " + std::to_string(max_chars) +
                                              " outside [1, " + std::to_string(kMaxSweepChars) +
                                              "]");
    }
    std::vector<SweepRecord> records;
    records.reserve(max_chars);
    for (std::size_t n = 1; n <= max_chars; ++n) {
        const std::string message(n, 't');
        const AudioClip stego = embed(codec, cover, message);
        const std::string recovered = extract(codec, stego, 8 * n);
        const VerificationReport report = verify(message, recovered);
        records.push_back({codec, n, 8 * n, report.bit_error_rate, report.message_accuracy});
    }
    return records;
}

std::vector<PhaseRecord> phase_dump(const AudioClip& cover, std::string_view message,
                                    Codec codec, DumpMode mode)
{
    const EmbedTrace trace = embed_spectra(codec, cover.samples, message);
    const StegoParams& params = trace.params;

    std::vector<Spectrum> stego_spectra;
    const std::vector<Spectrum>* stego = &trace.stego;
    if (mode == DumpMode::post_quantization) {
        const FftPlan plan(params.seg_len);
        const auto audio = quantize(synthesize_segments(trace.stego, plan));
        stego_spectra = analyze_segments(audio, params, plan);
        stego = &stego_spectra;
    }

    std::vector<PhaseRecord> records;
    records.reserve(params.seg_num * params.seg_mid);
    for (std::size_t i = 0; i < params.seg_num; ++i) {
        for (std::size_t k = 0; k < params.seg_mid; ++k) {
            records.push_back({i, k, trace.cover[i].phases[k], (*stego)[i].phases[k]});
        }
    }
    return records;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records)
{
    out << "codec,message_chars,message_bits,ber,accuracy\n";
    char ber[32];
    for (const auto& r : records) {
        std::snprintf(ber, sizeof ber, "%.6f", r.ber);
        out << to_string(r.codec) << ',' << r.message_chars << ',' << r.message_bits << ','
            << ber << ',' << (r.accuracy ? "true" : "false") << '\n';
    }
}

void write_phase_csv(std::ostream& out, std::span<const PhaseRecord> records)
{
    out << "segment,bin,cover_phase,stego_phase\n";
    char line[96];
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%zu,%zu,%.9f,%.9f\n", r.segment_index, r.bin_index,
                      r.cover_phase, r.stego_phase);
        out << line;
    }
}

} // namespace phasesteg
