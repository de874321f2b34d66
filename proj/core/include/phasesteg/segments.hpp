#pragma once

#include "phasesteg/bits.hpp"
#include "phasesteg/dft.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phasesteg {

/// Segmentation geometry shared by both codecs.
struct StegoParams {
    std::size_t msg_len_bits = 0;
    std::size_t seg_len = 0;
    std::size_t seg_num = 0;
    std::size_t seg_mid = 0;
    std::size_t padded_len = 0;

    bool operator==(const StegoParams&) const = default;
};

inline constexpr std::size_t kMaxSegmentLength = std::size_t{1} << 24;

/// seg_len is twice the smallest power of two >= 2 * msg_len_bits;
/// seg_num = ceil(cover_len / seg_len), at least 1.
/// Throws Error{EmptyMessage} for zero bits, Error{MessageTooLarge} when
/// seg_len would exceed kMaxSegmentLength.
StegoParams derive_params(std::size_t msg_len_bits, std::size_t cover_len);

/// Half-open range of message bit indices carried by one segment.
struct BitRange {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - start; }
    bool empty() const noexcept { return start == end; }
    bool operator==(const BitRange&) const = default;
};

/// [i*m/n, (i+1)*m/n) with integer division. Ranges for i = 0..n-1 partition
/// [0, m); short messages leave some segments empty.
BitRange segment_bit_range(std::size_t segment, const StegoParams& params);

/// Transforms segment i of the zero-padded signal.
Spectrum analyze_segment(std::span<const std::int16_t> samples, const StegoParams& params,
                         const FftPlan& plan, std::size_t segment);

/// Zero-pads (or truncates) to params.padded_len and transforms each segment.
std::vector<Spectrum> analyze_segments(std::span<const std::int16_t> samples,
                                       const StegoParams& params,
                                       const FftPlan& plan);

/// Concatenated real inverse transforms, before quantization.
std::vector<double> synthesize_segments(const std::vector<Spectrum>& spectra,
                                        const FftPlan& plan);

/// Round to nearest, then clamp to the int16 range.
std::vector<std::int16_t> quantize(std::span<const double> samples);

/// Writes symbols[j] into phase bin first_bin + j and the negated value into
/// the conjugate bin l - (first_bin + j). Magnitudes are left alone.
void write_phase_band(Spectrum& spectrum, std::size_t first_bin,
                      std::span<const double> symbols);

/// Appends one bit per bin in [first_bin, first_bin + count).
void read_phase_band(const Spectrum& spectrum, std::size_t first_bin,
                     std::size_t count, BitVector& out);

/// Cover and stego spectra of an embedding, before quantization.
struct EmbedTrace {
    StegoParams params;
    std::vector<Spectrum> cover;
    std::vector<Spectrum> stego;
};

} // namespace phasesteg
