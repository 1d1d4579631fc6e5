#pragma once

#include <span>

#include <Eigen/Core>

#include "csrfbs/linop.hpp"
#include "csrfbs/video.hpp"

namespace csrfbs {

enum class BackgroundKind { LowRank, StaticScene };

/**
 * Pluggable background regularizer. LowRank penalizes the nuclear norm of
 * the frames-as-rows matrix inside the primal prox (no dual block);
 * StaticScene carries one dual block through the temporal difference with
 * an identity conjugate prox and an identity primal prox.
 */
struct BackgroundModel {
    BackgroundKind kind = BackgroundKind::LowRank;
    double lambda_lr = 1.0;

    static BackgroundModel low_rank(double lambda) {
        return {BackgroundKind::LowRank, lambda};
    }
    static BackgroundModel static_scene() {
        return {BackgroundKind::StaticScene, 0.0};
    }

    int dual_block_count() const {
        return kind == BackgroundKind::StaticScene ? 1 : 0;
    }
    /// Sum of squared operator norms of the model's dual-block maps
    /// (StaticScene: ||D_t||^2 <= 4).
    double dual_norm_sq_sum() const {
        return kind == BackgroundKind::StaticScene ? 4.0 : 0.0;
    }
};

/// Frames-as-rows matrix, n3 x (n1*n2).
Eigen::MatrixXd mat_frames(const VideoTensor& b);
VideoTensor unmat_frames(const Eigen::MatrixXd& B, const Dims& dims);

/// SVT prox of the low-rank model on the vectorized video.
VideoTensor lowrank_prox_b(const VideoTensor& b, double gamma_b,
                           double lambda_lr);

/// StaticScene dual update y += gamma_z * diff_t(b_tilde); the conjugate
/// prox of the zero-set indicator is the identity.
void static_scene_dual_step(std::span<double> y, const VideoTensor& b_tilde,
                            double gamma_z);

/// Primal stepsize for b: 1 / (9 + sum of dual-block squared norms);
/// 1/9 for LowRank, 1/13 for StaticScene.
double model_stepsize(const BackgroundModel& model);
double model_stepsize_for(double sum_dual_op_norm_sq);

/// Replace every frame with the temporal mean, making diff_t(b) exactly zero.
VideoTensor temporal_mean_broadcast(const VideoTensor& b);

}  // namespace csrfbs
