#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace phasesteg {

/// Polar form of a length-l DFT. Phases are principal values in (-pi, pi];
/// a bin with zero magnitude has phase 0.
struct Spectrum {
    std::vector<double> magnitudes;
    std::vector<double> phases;

    std::size_t size() const noexcept { return magnitudes.size(); }
};

bool is_power_of_two(std::size_t n) noexcept;

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians) noexcept;

/// Phase of a complex value using the module's conventions.
double phase_of(std::complex<double> value) noexcept;

/// Radix-2 FFT of a fixed power-of-two length. Twiddles and the bit-reversal
/// table are computed once; a plan is immutable afterwards and can be shared
/// between threads.
class FftPlan {
public:
    /// Throws Error{BadLength} unless size is a power of two >= 2.
    explicit FftPlan(std::size_t size);

    std::size_t size() const noexcept { return size_; }

    /// In-place unnormalized forward transform, X[k] = sum x[t] e^{-2 pi i kt/l}.
    void forward(std::span<std::complex<double>> data) const;

    /// In-place inverse transform including the 1/l scale.
    void inverse(std::span<std::complex<double>> data) const;

    Spectrum analyze(std::span<const double> segment) const;

    /// Real part of the inverse of A * exp(i phi).
    std::vector<double> synthesize(const Spectrum& spectrum) const;

    /// Full complex inverse of A * exp(i phi), for residue checks.
    std::vector<std::complex<double>> synthesize_complex(const Spectrum& spectrum) const;

private:
    void transform(std::span<std::complex<double>> data, bool conjugate) const;

    std::size_t size_;
    std::vector<std::size_t> bit_reverse_;
    std::vector<std::complex<double>> twiddles_;
};

/// Throws Error{BadLength} for lengths that are not a power of two >= 2.
Spectrum forward(std::span<const double> segment);

/// Throws Error{BadLength} for malformed spectra.
std::vector<double> inverse(const Spectrum& spectrum);

} // namespace phasesteg
