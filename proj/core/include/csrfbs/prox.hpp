#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace csrfbs {

/// Elementwise sgn(x_i) * max(|x_i| - alpha, 0); prox of alpha*||.||_1.
void soft_threshold(std::span<double> x, double alpha);
std::vector<double> soft_threshold(std::span<const double> x, double alpha);

/// x / (1 + alpha); prox of (alpha/2)*||.||_2^2.
std::vector<double> prox_half_sq(std::span<const double> x, double alpha);

/// Projection onto the l2 ball of radius eps centered at center (in place).
void project_l2_ball(std::span<double> x, std::span<const double> center,
                     double eps);

/// Euclidean projection onto {y : ||y||_1 <= eta}, exact sort-and-scan
/// method (in place).
void project_l1_ball(std::span<double> x, double eta);
std::vector<double> project_l1_ball(std::span<const double> x, double eta);

/// prox of the conjugate via the Moreau decomposition:
/// prox_{gamma h*}(y) = y - gamma * prox_{h/gamma}(y / gamma).
/// prox_h receives (vector, alpha) and must evaluate prox_{alpha h} in place.
std::vector<double> prox_conjugate(
    const std::function<void(std::span<double>, double)>& prox_h,
    std::span<const double> y, double gamma);

/// Singular value thresholding: U * max(S - gamma, 0) * V^T.
/// Throws on non-finite entries.
Eigen::MatrixXd svt(const Eigen::MatrixXd& B, double gamma);

/// Scale d onto the unit l2 ball if it lies outside.
void project_unit_l2(std::span<double> d);
Eigen::MatrixXd project_unit_l2(const Eigen::MatrixXd& d);

}  // namespace csrfbs
