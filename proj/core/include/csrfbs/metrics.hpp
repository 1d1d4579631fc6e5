#pragma once

#include <vector>

#include "csrfbs/video.hpp"

namespace csrfbs {

struct MpsnrResult {
    double value = 0.0;        // dB, mean over frames
    int capped_frames = 0;     // frames pinned at the 100 dB cap
};

/// Mean per-frame PSNR with peak 1: (1/n3) * sum_k 10*log10(n1*n2 / ||q_k - ref_k||^2),
/// each frame capped at 100 dB.
MpsnrResult mpsnr(const VideoTensor& estimate, const VideoTensor& reference);

/// Mean per-frame SSIM, 11x11 Gaussian window sigma=1.5, C1=0.01^2,
/// C2=0.03^2, dynamic range 1. Throws if a frame is smaller than the window.
double mssim(const VideoTensor& estimate, const VideoTensor& reference);

/// Binary foreground map: 1 where |f| > tau.
VideoTensor threshold_map(const VideoTensor& f, double tau);

/// Exact ROC AUC of scores |f_estimate| against a binary map, midrank ties.
/// Throws if the map is all-zero or all-one.
double auc(const VideoTensor& f_estimate, const VideoTensor& map);

/// Weighted recovery error used for parameter tuning:
/// sum_i |u_ref - mean(u_ref)| (u - u_ref)^2 + (same for f) + (same for b).
double tuning_measure(const VideoTensor& u, const VideoTensor& f,
                      const VideoTensor& b, const VideoTensor& u_ref,
                      const VideoTensor& f_ref, const VideoTensor& b_ref);

}  // namespace csrfbs
