#include "csrfbs/fft.hpp"

#include <cstring>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace csrfbs {

namespace {
// The FFTW planner is not thread-safe; execution on private buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct FrameFft::Impl {
    int n1 = 0;
    int n2 = 0;
    std::size_t bins = 0;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

FrameFft::FrameFft(int n1, int n2) : impl_(std::make_unique<Impl>()) {
    if (n1 <= 0 || n2 <= 0) throw std::invalid_argument("FrameFft: bad dims");
    impl_->n1 = n1;
    impl_->n2 = n2;
    // Column-major n1 x n2 frame == row-major array with dims {n2, n1}.
    impl_->bins = static_cast<std::size_t>(n2) * (n1 / 2 + 1);
    impl_->real = fftw_alloc_real(static_cast<std::size_t>(n1) * n2);
    impl_->cplx = fftw_alloc_complex(impl_->bins);
    if (!impl_->real || !impl_->cplx) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    impl_->fwd = fftw_plan_dft_r2c_2d(n2, n1, impl_->real, impl_->cplx,
                                      FFTW_ESTIMATE);
    impl_->inv = fftw_plan_dft_c2r_2d(n2, n1, impl_->cplx, impl_->real,
                                      FFTW_ESTIMATE);
    if (!impl_->fwd || !impl_->inv)
        throw std::runtime_error("FrameFft: plan creation failed");
}

FrameFft::~FrameFft() {
    if (!impl_) return;
    std::lock_guard lock(planner_mutex());
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->inv) fftw_destroy_plan(impl_->inv);
    if (impl_->real) fftw_free(impl_->real);
    if (impl_->cplx) fftw_free(impl_->cplx);
}

int FrameFft::n1() const { return impl_->n1; }
int FrameFft::n2() const { return impl_->n2; }
std::size_t FrameFft::bins() const { return impl_->bins; }

void FrameFft::forward(std::span<const double> frame,
                       std::complex<double>* spectrum) const {
    const std::size_t n = static_cast<std::size_t>(impl_->n1) * impl_->n2;
    if (frame.size() != n) throw std::invalid_argument("FrameFft: frame size");
    std::memcpy(impl_->real, frame.data(), n * sizeof(double));
    fftw_execute(impl_->fwd);
    std::memcpy(spectrum, impl_->cplx, impl_->bins * sizeof(fftw_complex));
}

void FrameFft::inverse(const std::complex<double>* spectrum,
                       std::span<double> frame) const {
    const std::size_t n = static_cast<std::size_t>(impl_->n1) * impl_->n2;
    if (frame.size() != n) throw std::invalid_argument("FrameFft: frame size");
    std::memcpy(impl_->cplx, spectrum, impl_->bins * sizeof(fftw_complex));
    fftw_execute(impl_->inv);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) frame[i] = impl_->real[i] * scale;
}

}  // namespace csrfbs
