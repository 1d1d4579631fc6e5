#include "csrfbs/linop.hpp"

#include <cmath>
#include <complex>
#include <cstring>
#include <functional>
#include <stdexcept>

#include "csrfbs/fft.hpp"

namespace csrfbs {

namespace {

inline Dims dims_of(const VideoTensor& v) { return {v.n1(), v.n2(), v.n3()}; }

}  // namespace

VideoTensor diff_v(const VideoTensor& x) {
    VideoTensor y(x.n1(), x.n2(), x.n3());
    const int n1 = x.n1(), n2 = x.n2(), n3 = x.n3();
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j) {
            const std::size_t base = x.index(0, j, k);
            for (int i = 0; i + 1 < n1; ++i)
                y.data()[base + i] = x.data()[base + i + 1] - x.data()[base + i];
        }
    return y;
}

VideoTensor diff_v_adjoint(const VideoTensor& y) {
    VideoTensor x(y.n1(), y.n2(), y.n3());
    const int n1 = y.n1(), n2 = y.n2(), n3 = y.n3();
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j) {
            const std::size_t base = y.index(0, j, k);
            for (int i = 0; i < n1; ++i) {
                double acc = 0.0;
                if (i >= 1) acc += y.data()[base + i - 1];
                if (i + 1 < n1) acc -= y.data()[base + i];
                x.data()[base + i] = acc;
            }
        }
    return x;
}

VideoTensor diff_h(const VideoTensor& x) {
    VideoTensor y(x.n1(), x.n2(), x.n3());
    const int n1 = x.n1(), n2 = x.n2(), n3 = x.n3();
    const std::size_t col = static_cast<std::size_t>(n1);
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j + 1 < n2; ++j) {
            const std::size_t base = x.index(0, j, k);
            for (int i = 0; i < n1; ++i)
                y.data()[base + i] = x.data()[base + col + i] - x.data()[base + i];
        }
    return y;
}

VideoTensor diff_h_adjoint(const VideoTensor& y) {
    VideoTensor x(y.n1(), y.n2(), y.n3());
    const int n1 = y.n1(), n2 = y.n2(), n3 = y.n3();
    const std::size_t col = static_cast<std::size_t>(n1);
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j) {
            const std::size_t base = y.index(0, j, k);
            for (int i = 0; i < n1; ++i) {
                double acc = 0.0;
                if (j >= 1) acc += y.data()[base - col + i];
                if (j + 1 < n2) acc -= y.data()[base + i];
                x.data()[base + i] = acc;
            }
        }
    return x;
}

VideoTensor diff_t(const VideoTensor& x) {
    VideoTensor y(x.n1(), x.n2(), x.n3());
    const std::size_t fs = x.frame_size();
    for (int k = 0; k + 1 < x.n3(); ++k) {
        const double* cur = x.data().data() + k * fs;
        const double* nxt = cur + fs;
        double* out = y.data().data() + k * fs;
        for (std::size_t i = 0; i < fs; ++i) out[i] = nxt[i] - cur[i];
    }
    return y;
}

VideoTensor diff_t_adjoint(const VideoTensor& y) {
    VideoTensor x(y.n1(), y.n2(), y.n3());
    const std::size_t fs = y.frame_size();
    const int n3 = y.n3();
    for (int k = 0; k < n3; ++k) {
        double* out = x.data().data() + k * fs;
        const double* prev = k >= 1 ? y.data().data() + (k - 1) * fs : nullptr;
        const double* cur = k + 1 < n3 ? y.data().data() + k * fs : nullptr;
        for (std::size_t i = 0; i < fs; ++i) {
            double acc = 0.0;
            if (prev) acc += prev[i];
            if (cur) acc -= cur[i];
            out[i] = acc;
        }
    }
    return x;
}

std::vector<double> tv_stack(const VideoTensor& x) {
    const VideoTensor dv = diff_v(x);
    const VideoTensor dh = diff_h(x);
    std::vector<double> out(2 * x.size());
    std::memcpy(out.data(), dv.data().data(), x.size() * sizeof(double));
    std::memcpy(out.data() + x.size(), dh.data().data(),
                x.size() * sizeof(double));
    return out;
}

VideoTensor tv_stack_adjoint(std::span<const double> y, const Dims& dims) {
    const std::size_t n = dims.total();
    detail::require(y.size() == 2 * n, "tv_stack_adjoint: bad length");
    VideoTensor yv(dims.n1, dims.n2, dims.n3,
                   std::vector<double>(y.begin(), y.begin() + n));
    VideoTensor yh(dims.n1, dims.n2, dims.n3,
                   std::vector<double>(y.begin() + n, y.end()));
    VideoTensor out = diff_v_adjoint(yv);
    const VideoTensor oh = diff_h_adjoint(yh);
    for (std::size_t i = 0; i < n; ++i) out.data()[i] += oh.data()[i];
    return out;
}

std::vector<double> flat_stack(const VideoTensor& l, bool time_invariant) {
    const VideoTensor dv = diff_v(l);
    if (!time_invariant) return dv.data();
    const VideoTensor dt = diff_t(l);
    std::vector<double> out(2 * l.size());
    std::memcpy(out.data(), dv.data().data(), l.size() * sizeof(double));
    std::memcpy(out.data() + l.size(), dt.data().data(),
                l.size() * sizeof(double));
    return out;
}

VideoTensor flat_stack_adjoint(std::span<const double> y, const Dims& dims,
                               bool time_invariant) {
    const std::size_t n = dims.total();
    if (!time_invariant) {
        detail::require(y.size() == n, "flat_stack_adjoint: bad length");
        return diff_v_adjoint(VideoTensor(dims.n1, dims.n2, dims.n3,
                                          std::vector<double>(y.begin(), y.end())));
    }
    detail::require(y.size() == 2 * n, "flat_stack_adjoint: bad length");
    VideoTensor yv(dims.n1, dims.n2, dims.n3,
                   std::vector<double>(y.begin(), y.begin() + n));
    VideoTensor yt(dims.n1, dims.n2, dims.n3,
                   std::vector<double>(y.begin() + n, y.end()));
    VideoTensor out = diff_v_adjoint(yv);
    const VideoTensor ot = diff_t_adjoint(yt);
    for (std::size_t i = 0; i < n; ++i) out.data()[i] += ot.data()[i];
    return out;
}

namespace {

void check_filter_fits(const Eigen::MatrixXd& d, int n1, int n2) {
    detail::require(d.rows() >= 1 && d.cols() >= 1, "conv: empty filter");
    detail::require(d.rows() <= n1 && d.cols() <= n2,
                    "conv: filter larger than frame");
}

// Zero-pad the filter to one frame, anchored at (0, 0), column-major.
std::vector<double> pad_filter(const Eigen::MatrixXd& d, int n1, int n2) {
    std::vector<double> pad(static_cast<std::size_t>(n1) * n2, 0.0);
    for (int j = 0; j < d.cols(); ++j)
        for (int i = 0; i < d.rows(); ++i)
            pad[static_cast<std::size_t>(j) * n1 + i] = d(i, j);
    return pad;
}

VideoTensor conv_fft(const Eigen::MatrixXd& d, const VideoTensor& a,
                     bool adjoint) {
    const int n1 = a.n1(), n2 = a.n2(), n3 = a.n3();
    FrameFft fft(n1, n2);
    std::vector<std::complex<double>> dhat(fft.bins());
    fft.forward(pad_filter(d, n1, n2), dhat.data());
    if (adjoint)
        for (auto& c : dhat) c = std::conj(c);

    VideoTensor out(n1, n2, n3);
    std::vector<std::complex<double>> ahat(fft.bins());
    const std::size_t fs = a.frame_size();
    for (int k = 0; k < n3; ++k) {
        fft.forward(std::span(a.data().data() + k * fs, fs), ahat.data());
        for (std::size_t b = 0; b < fft.bins(); ++b) ahat[b] *= dhat[b];
        fft.inverse(ahat.data(), std::span(out.data().data() + k * fs, fs));
    }
    return out;
}

VideoTensor conv_direct(const Eigen::MatrixXd& d, const VideoTensor& a,
                        bool adjoint) {
    const int n1 = a.n1(), n2 = a.n2(), n3 = a.n3();
    VideoTensor out(n1, n2, n3);
    const int p = static_cast<int>(d.rows());
    const int q = static_cast<int>(d.cols());
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j)
            for (int i = 0; i < n1; ++i) {
                double acc = 0.0;
                for (int v = 0; v < q; ++v)
                    for (int u = 0; u < p; ++u) {
                        int si, sj;
                        if (!adjoint) {
                            si = (i - u) % n1;
                            if (si < 0) si += n1;
                            sj = (j - v) % n2;
                            if (sj < 0) sj += n2;
                        } else {
                            si = (i + u) % n1;
                            sj = (j + v) % n2;
                        }
                        acc += d(u, v) * a(si, sj, k);
                    }
                out(i, j, k) = acc;
            }
    return out;
}

}  // namespace

VideoTensor conv_apply(const Eigen::MatrixXd& d, const VideoTensor& a,
                       ConvMethod method) {
    check_filter_fits(d, a.n1(), a.n2());
    return method == ConvMethod::Fft ? conv_fft(d, a, false)
                                     : conv_direct(d, a, false);
}

VideoTensor conv_adjoint(const Eigen::MatrixXd& d, const VideoTensor& y,
                         ConvMethod method) {
    check_filter_fits(d, y.n1(), y.n2());
    return method == ConvMethod::Fft ? conv_fft(d, y, true)
                                     : conv_direct(d, y, true);
}

double conv_norm_sq(const Eigen::MatrixXd& d, int n1, int n2) {
    check_filter_fits(d, n1, n2);
    FrameFft fft(n1, n2);
    std::vector<std::complex<double>> dhat(fft.bins());
    fft.forward(pad_filter(d, n1, n2), dhat.data());
    double best = 0.0;
    for (const auto& c : dhat) best = std::max(best, std::norm(c));
    return best;
}

double op_norm_sq_power(const LinearMap& map, int iters, std::uint64_t seed) {
    detail::require(iters >= 1, "op_norm_sq_power: iters must be >= 1");
    std::vector<double> x(map.in_dim());
    // splitmix64 stream; independent of the noise module RNG
    std::uint64_t state = seed;
    for (auto& xi : x) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        xi = static_cast<double>(z >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }

    std::vector<double> y(map.out_dim());
    double estimate = 0.0;
    for (int it = 0; it < iters; ++it) {
        double nx = 0.0;
        for (double xi : x) nx += xi * xi;
        nx = std::sqrt(nx);
        if (nx == 0.0) return 0.0;
        for (auto& xi : x) xi /= nx;
        map.apply(x, y);
        double ny = 0.0;
        for (double yi : y) ny += yi * yi;
        estimate = ny;  // Rayleigh quotient of L*L at the unit vector x
        map.adjoint(y, x);
    }
    return estimate;
}

namespace {

class CallbackMap : public LinearMap {
public:
    using Fn = std::function<void(std::span<const double>, std::span<double>)>;

    CallbackMap(std::size_t in, std::size_t out, double norm_sq, Fn apply, Fn adj)
        : in_(in), out_(out), norm_sq_(norm_sq),
          apply_(std::move(apply)), adjoint_(std::move(adj)) {}

    std::size_t in_dim() const override { return in_; }
    std::size_t out_dim() const override { return out_; }
    void apply(std::span<const double> x, std::span<double> y) const override {
        detail::require(x.size() == in_ && y.size() == out_, "LinearMap: bad dims");
        apply_(x, y);
    }
    void adjoint(std::span<const double> y, std::span<double> x) const override {
        detail::require(y.size() == out_ && x.size() == in_, "LinearMap: bad dims");
        adjoint_(y, x);
    }
    double op_norm_sq() const override { return norm_sq_; }

private:
    std::size_t in_, out_;
    double norm_sq_;
    Fn apply_, adjoint_;
};

VideoTensor to_video(std::span<const double> x, const Dims& d) {
    return VideoTensor(d.n1, d.n2, d.n3, std::vector<double>(x.begin(), x.end()));
}

std::unique_ptr<LinearMap> wrap_video_op(
    const Dims& dims, double norm_sq,
    std::function<VideoTensor(const VideoTensor&)> fwd,
    std::function<VideoTensor(const VideoTensor&)> adj) {
    const std::size_t n = dims.total();
    return std::make_unique<CallbackMap>(
        n, n, norm_sq,
        [dims, fwd](std::span<const double> x, std::span<double> y) {
            const VideoTensor out = fwd(to_video(x, dims));
            std::copy(out.data().begin(), out.data().end(), y.begin());
        },
        [dims, adj](std::span<const double> y, std::span<double> x) {
            const VideoTensor out = adj(to_video(y, dims));
            std::copy(out.data().begin(), out.data().end(), x.begin());
        });
}

}  // namespace

std::unique_ptr<LinearMap> make_identity_map(const Dims& dims) {
    const std::size_t n = dims.total();
    auto copy = [](std::span<const double> a, std::span<double> b) {
        std::copy(a.begin(), a.end(), b.begin());
    };
    return std::make_unique<CallbackMap>(n, n, 1.0, copy, copy);
}

std::unique_ptr<LinearMap> make_diff_v_map(const Dims& dims) {
    return wrap_video_op(dims, 4.0, [](const VideoTensor& x) { return diff_v(x); },
                         [](const VideoTensor& y) { return diff_v_adjoint(y); });
}

std::unique_ptr<LinearMap> make_diff_h_map(const Dims& dims) {
    return wrap_video_op(dims, 4.0, [](const VideoTensor& x) { return diff_h(x); },
                         [](const VideoTensor& y) { return diff_h_adjoint(y); });
}

std::unique_ptr<LinearMap> make_diff_t_map(const Dims& dims) {
    return wrap_video_op(dims, 4.0, [](const VideoTensor& x) { return diff_t(x); },
                         [](const VideoTensor& y) { return diff_t_adjoint(y); });
}

std::unique_ptr<LinearMap> make_tv_map(const Dims& dims) {
    const std::size_t n = dims.total();
    return std::make_unique<CallbackMap>(
        n, 2 * n, 8.0,
        [dims](std::span<const double> x, std::span<double> y) {
            const auto out = tv_stack(to_video(x, dims));
            std::copy(out.begin(), out.end(), y.begin());
        },
        [dims](std::span<const double> y, std::span<double> x) {
            const VideoTensor out = tv_stack_adjoint(y, dims);
            std::copy(out.data().begin(), out.data().end(), x.begin());
        });
}

std::unique_ptr<LinearMap> make_flat_map(const Dims& dims, bool time_invariant) {
    const std::size_t n = dims.total();
    const std::size_t out_n = time_invariant ? 2 * n : n;
    return std::make_unique<CallbackMap>(
        n, out_n, time_invariant ? 8.0 : 4.0,
        [dims, time_invariant](std::span<const double> x, std::span<double> y) {
            const auto out = flat_stack(to_video(x, dims), time_invariant);
            std::copy(out.begin(), out.end(), y.begin());
        },
        [dims, time_invariant](std::span<const double> y, std::span<double> x) {
            const VideoTensor out = flat_stack_adjoint(y, dims, time_invariant);
            std::copy(out.data().begin(), out.data().end(), x.begin());
        });
}

std::unique_ptr<LinearMap> make_conv_map(const Eigen::MatrixXd& d,
                                         const Dims& dims) {
    return wrap_video_op(
        dims, conv_norm_sq(d, dims.n1, dims.n2),
        [d](const VideoTensor& a) { return conv_apply(d, a); },
        [d](const VideoTensor& y) { return conv_adjoint(d, y); });
}

}  // namespace csrfbs
