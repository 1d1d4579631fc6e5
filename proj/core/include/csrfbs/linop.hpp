#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "csrfbs/video.hpp"

namespace csrfbs {

/**
 * Abstract linear operator on vectorized videos. Implementations must
 * satisfy <apply(x), y> = <x, adjoint(y)> and ||apply(x)||^2 <=
 * op_norm_sq() * ||x||^2; both are enforced by randomized tests.
 */
class LinearMap {
public:
    virtual ~LinearMap() = default;

    virtual std::size_t in_dim() const = 0;
    virtual std::size_t out_dim() const = 0;
    virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
    virtual void adjoint(std::span<const double> y, std::span<double> x) const = 0;
    /// Upper bound on the squared operator norm.
    virtual double op_norm_sq() const = 0;
};

struct Dims {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    std::size_t total() const {
        return static_cast<std::size_t>(n1) * n2 * n3;
    }
};

// Forward differences with the Neumann boundary rule: the output is zero at
// the last index along the differenced axis.
VideoTensor diff_v(const VideoTensor& x);
VideoTensor diff_h(const VideoTensor& x);
VideoTensor diff_t(const VideoTensor& x);
VideoTensor diff_v_adjoint(const VideoTensor& y);
VideoTensor diff_h_adjoint(const VideoTensor& y);
VideoTensor diff_t_adjoint(const VideoTensor& y);

/// [diff_v(x); diff_h(x)] as one flat vector of length 2*n1*n2*n3.
std::vector<double> tv_stack(const VideoTensor& x);
/// Adjoint of tv_stack.
VideoTensor tv_stack_adjoint(std::span<const double> y, const Dims& dims);

/// Stripe-flatness stack: [diff_v(l); diff_t(l)] when time_invariant,
/// diff_v(l) alone otherwise.
std::vector<double> flat_stack(const VideoTensor& l, bool time_invariant);
VideoTensor flat_stack_adjoint(std::span<const double> y, const Dims& dims,
                               bool time_invariant);

enum class ConvMethod { Fft, Direct };

/// Per-frame 2-D circular convolution of every frame of a with the
/// zero-padded filter d (anchored at index (0,0)). Throws if the filter is
/// larger than a frame.
VideoTensor conv_apply(const Eigen::MatrixXd& d, const VideoTensor& a,
                       ConvMethod method = ConvMethod::Fft);

/// Adjoint of conv_apply: per-frame circular correlation with d.
VideoTensor conv_adjoint(const Eigen::MatrixXd& d, const VideoTensor& y,
                         ConvMethod method = ConvMethod::Fft);

/// Exact squared operator norm of the per-frame circular convolution with d
/// on n1 x n2 frames: the largest |dhat|^2 over the 2-D DFT bins of the
/// zero-padded filter.
double conv_norm_sq(const Eigen::MatrixXd& d, int n1, int n2);

/// Power-iteration estimate of ||map||^2 (largest eigenvalue of L*L).
/// Deterministic given the seed; nondecreasing in iters.
double op_norm_sq_power(const LinearMap& map, int iters, std::uint64_t seed);

// LinearMap wrappers over the free functions, for adjoint/norm validation
// and generic call sites.
std::unique_ptr<LinearMap> make_identity_map(const Dims& dims);
std::unique_ptr<LinearMap> make_diff_v_map(const Dims& dims);
std::unique_ptr<LinearMap> make_diff_h_map(const Dims& dims);
std::unique_ptr<LinearMap> make_diff_t_map(const Dims& dims);
std::unique_ptr<LinearMap> make_tv_map(const Dims& dims);
std::unique_ptr<LinearMap> make_flat_map(const Dims& dims, bool time_invariant);
std::unique_ptr<LinearMap> make_conv_map(const Eigen::MatrixXd& d, const Dims& dims);

}  // namespace csrfbs
