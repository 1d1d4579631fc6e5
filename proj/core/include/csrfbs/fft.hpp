#pragma once

#include <complex>
#include <memory>
#include <span>

namespace csrfbs {

/**
 * Real 2-D FFT of one video frame in the canonical column-major layout,
 * wrapping FFTW. One instance owns its aligned buffers and plans, so it is
 * cheap to call repeatedly but must not be shared across threads.
 *
 * The half spectrum has n2 * (n1/2 + 1) bins; circular convolution is an
 * elementwise product of spectra, correlation multiplies by the conjugate.
 */
class FrameFft {
public:
    FrameFft(int n1, int n2);
    ~FrameFft();

    FrameFft(const FrameFft&) = delete;
    FrameFft& operator=(const FrameFft&) = delete;

    int n1() const;
    int n2() const;
    std::size_t bins() const;

    void forward(std::span<const double> frame, std::complex<double>* spectrum) const;
    /// Inverse transform, normalized by 1/(n1*n2).
    void inverse(const std::complex<double>* spectrum, std::span<double> frame) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace csrfbs
