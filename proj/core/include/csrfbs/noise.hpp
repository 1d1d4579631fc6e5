#pragma once

#include <cstdint>
#include <utility>

#include "csrfbs/video.hpp"

namespace csrfbs {

/**
 * Deterministic random stream: mt19937_64 with explicit mappings to
 * uniforms (53-bit) and normals (Box-Muller), so sequences are identical
 * across standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();                     // [0, 1)
    double uniform(double lo, double hi);
    double normal();                        // standard normal

private:
    std::uint64_t splitmix();
    std::uint64_t state_;
    std::uint64_t mt_[312];
    int mt_index_ = 313;  // force init on first draw
    bool mt_seeded_ = false;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct NoiseSpec {
    double sigma = 0.0;                 // Gaussian standard deviation
    double salt_pepper_rate = 0.0;      // in [0, 1]
    double stripe_amp = 0.0;            // half-range of stripe offsets
    bool stripe_time_invariant = true;
    std::uint64_t seed = 0;
};

/// v + i.i.d. N(0, sigma^2); deterministic per seed.
VideoTensor add_gaussian(const VideoTensor& v, double sigma, std::uint64_t seed);

/// Each pixel independently replaced by 0 or 1 (equal odds) with
/// probability rate.
VideoTensor add_salt_pepper(const VideoTensor& v, double rate,
                            std::uint64_t seed);

/// Additive per-column stripe offsets, uniform in [-amp, amp], constant
/// along rows; replicated across frames when time_invariant. Returns the
/// degraded video and the exact stripe field.
std::pair<VideoTensor, VideoTensor> add_stripes(const VideoTensor& v,
                                                double amp,
                                                bool time_invariant,
                                                std::uint64_t seed);

/// Constraint radii from noise statistics:
/// eta_s = 0.5 * p_s * n1*n2*n3, eps = 0.9 * sigma * sqrt((1-p_s)*n1*n2*n3).
std::pair<double, double> derive_radii(double sigma, double salt_pepper_rate,
                                       int n1, int n2, int n3);

struct DegradedVideo {
    VideoTensor observed;
    VideoTensor sparse_field;  // replacement deltas from salt-and-pepper
    VideoTensor stripe_field;
};

/// Full degradation: Gaussian, then salt-and-pepper replacement, then
/// additive stripes; observed = clean + gaussian + sparse + stripes exactly.
DegradedVideo degrade(const VideoTensor& clean, const NoiseSpec& spec);

}  // namespace csrfbs
