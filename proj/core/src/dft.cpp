#include "phasesteg/dft.hpp"

#include "phasesteg/error.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace phasesteg {

namespace {

void require_valid_length(std::size_t n)
{
    if (n < 2 || !is_power_of_two(n)) {
        throw Error(ErrorCode::BadLength,
                    "transform length " + std::to_string(n) + " is not a power of two >= 2");
    }
}

} // namespace

bool is_power_of_two(std::size_t n) noexcept
{
    return n != 0 && (n & (n - 1)) == 0;
}

double wrap_phase(double radians) noexcept
{
    constexpr double pi = std::numbers::pi;
    double y = std::remainder(radians, 2.0 * pi);
    if (y <= -pi) {
        y += 2.0 * pi;
    } else if (y > pi) {
        y -= 2.0 * pi;
    }
    return y;
}

double phase_of(std::complex<double> value) noexcept
{
    if (value.real() == 0.0 && value.imag() == 0.0) {
        return 0.0;
    }
    const double angle = std::arg(value);
    // atan2 yields -pi for a negative real with a -0 imaginary part.
    return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

FftPlan::FftPlan(std::size_t size)
    : size_(size)
{
    require_valid_length(size);

    unsigned log2n = 0;
    while ((std::size_t{1} << log2n) < size) {
        ++log2n;
    }
    bit_reverse_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t r = 0;
        for (unsigned b = 0; b < log2n; ++b) {
            r |= ((i >> b) & 1u) << (log2n - 1 - b);
        }
        bit_reverse_[i] = r;
    }

    // Direct evaluation per index keeps twiddle error at one rounding; the
    // quarter-turn values are pinned so cos/sin residue never leaks in.
    twiddles_.resize(size / 2);
    for (std::size_t k = 0; k < size / 2; ++k) {
        if (k == 0) {
            twiddles_[k] = {1.0, 0.0};
        } else if (4 * k == size) {
            twiddles_[k] = {0.0, -1.0};
        } else {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(size);
            twiddles_[k] = {std::cos(angle), std::sin(angle)};
        }
    }
}

void FftPlan::transform(std::span<std::complex<double>> data, bool conjugate) const
{
    if (data.size() != size_) {
        throw Error(ErrorCode::BadLength, "buffer length " + std::to_string(data.size()) +
                                              " does not match plan length " +
                                              std::to_string(size_));
    }
    for (std::size_t i = 0; i < size_; ++i) {
        const std::size_t j = bit_reverse_[i];
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t len = 2; len <= size_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = size_ / len;
        for (std::size_t base = 0; base < size_; base += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = twiddles_[k * stride];
                if (conjugate) {
                    w = std::conj(w);
                }
                const std::complex<double> odd = w * data[base + k + half];
                const std::complex<double> even = data[base + k];
                data[base + k] = even + odd;
                data[base + k + half] = even - odd;
            }
        }
    }
}

void FftPlan::forward(std::span<std::complex<double>> data) const
{
    transform(data, false);
}

void FftPlan::inverse(std::span<std::complex<double>> data) const
{
    transform(data, true);
    const double scale = 1.0 / static_cast<double>(size_);
    for (auto& v : data) {
        v *= scale;
    }
}

Spectrum FftPlan::analyze(std::span<const double> segment) const
{
    if (segment.size() != size_) {
        throw Error(ErrorCode::BadLength, "segment length " + std::to_string(segment.size()) +
                                              " does not match plan length " +
                                              std::to_string(size_));
    }
    std::vector<std::complex<double>> buffer(segment.begin(), segment.end());
    forward(buffer);

    Spectrum out;
    out.magnitudes.resize(size_);
    out.phases.resize(size_);
    for (std::size_t k = 0; k < size_; ++k) {
        out.magnitudes[k] = std::abs(buffer[k]);
        out.phases[k] = phase_of(buffer[k]);
    }
    return out;
}

std::vector<std::complex<double>> FftPlan::synthesize_complex(const Spectrum& spectrum) const
{
    if (spectrum.magnitudes.size() != size_ || spectrum.phases.size() != size_) {
        throw Error(ErrorCode::BadLength, "spectrum length does not match plan length " +
                                              std::to_string(size_));
    }
    std::vector<std::complex<double>> buffer(size_);
    for (std::size_t k = 0; k < size_; ++k) {
        buffer[k] = std::polar(spectrum.magnitudes[k], spectrum.phases[k]);
    }
    inverse(buffer);
    return buffer;
}

std::vector<double> FftPlan::synthesize(const Spectrum& spectrum) const
{
    const auto buffer = synthesize_complex(spectrum);
    std::vector<double> out(size_);
    for (std::size_t t = 0; t < size_; ++t) {
        out[t] = buffer[t].real();
    }
    return out;
}

Spectrum forward(std::span<const double> segment)
{
    return FftPlan(segment.size()).analyze(segment);
}

std::vector<double> inverse(const Spectrum& spectrum)
{
    if (spectrum.magnitudes.size() != spectrum.phases.size()) {
        throw Error(ErrorCode::BadLength, "magnitude and phase arrays differ in length");
    }
    return FftPlan(spectrum.size()).synthesize(spectrum);
}

} // namespace phasesteg
