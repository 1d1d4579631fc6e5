#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "csrfbs/background.hpp"
#include "csrfbs/csr.hpp"
#include "csrfbs/video.hpp"

namespace csrfbs {

enum class StripeMode { Off, TimeInvariant, TimeVarying };

/**
 * Immutable description of one separation instance. The observed video is
 * decomposed as v = f + b + s + l + residual subject to
 *   ||f||_1 <= eta_f, ||s||_1 <= eta_s, ||f+b+s+l - v||_2 <= eps,
 *   D_l l = 0, ||d_d||_2 <= 1,
 * minimizing the CSR data term + lambda1 * l1(a) + lambda2 * l1(TV(f+b))
 * + background term + l1(l).
 */
struct SeparationProblem {
    VideoTensor v;
    double eps = 0.0;
    double eta_f = 0.0;
    double eta_s = 0.0;
    double lambda1 = 0.05;
    double lambda2 = 0.05;
    CsrConfig csr;
    BackgroundModel background;
    StripeMode stripe_mode = StripeMode::Off;
    bool ablation_no_csr = false;

    bool stripes_on() const { return stripe_mode != StripeMode::Off; }
    bool stripes_time_invariant() const {
        return stripe_mode == StripeMode::TimeInvariant;
    }
};

struct PrimalState {
    VideoTensor f, b, s, l;
    CoefficientStack a;
};

struct DualState {
    std::vector<std::vector<double>> y_bg;  // one entry per background dual block
    std::vector<double> y_flat;             // flatness dual (empty if stripes off)
    std::vector<double> y_tv;               // 2N
    std::vector<double> y_fid;              // N
    std::vector<double> y_quad;             // N (empty under ablation)
};

struct Stepsizes {
    double gamma_f = 0.0;
    double gamma_b = 0.0;
    double gamma_s = 0.0;
    double gamma_l = 0.0;
    double gamma_a = 0.0;
    double gamma_z = 0.0;
};

struct ConstraintSlacks {
    double fidelity = 0.0;   // ||f+b+s+l-v||_2 - eps
    double sparse_l1 = 0.0;  // ||s||_1 - eta_s
    double fore_l1 = 0.0;    // ||f||_1 - eta_f
    double flat_inf = 0.0;   // ||flat_stack(l)||_inf
};

struct InnerPhaseReport {
    int iterations = 0;
    double objective_start = 0.0;
    double objective_end = 0.0;
    double final_rel_change_f = 0.0;
    double final_rel_change_b = 0.0;
};

struct SolverReport {
    int outer_iters = 0;
    bool outer_converged = false;
    std::vector<InnerPhaseReport> inner_phases;
    std::vector<double> rel_change_f;  // per outer iteration
    std::vector<double> rel_change_b;
    ConstraintSlacks slacks;
    double wall_time_sec = 0.0;
};

struct SeparationResult {
    PrimalState state;
    DualState duals;
    Dictionary dict;
    SolverReport report;
};

struct SolveOptions {
    int max_outer = 300;
    int max_inner = 500;
    int fista_iters = 10;
    int refine_iters = 20000;
    double outer_tol = 1e-5;
    double inner_tol = 1e-6;
};

/// Exact stepsize constants: gamma_f = 1/10 (1/9 under ablation),
/// gamma_b per background model, gamma_s = 1, gamma_l = 1/9,
/// gamma_a = 1/sum_d conv_norm_sq(d_d), gamma_z = 1/(4 + D).
/// Throws on an all-zero dictionary with filters present.
Stepsizes compute_stepsizes(const SeparationProblem& problem,
                            const Dictionary& dict);

PrimalState make_initial_primal(const SeparationProblem& problem);
DualState make_initial_dual(const SeparationProblem& problem);

/// Finite part of the inner objective at a primal state (indicator terms
/// excluded; the l1-ball memberships hold exactly by construction).
double inner_objective(const SeparationProblem& problem, const Dictionary& dict,
                       const PrimalState& state);

ConstraintSlacks measure_slacks(const SeparationProblem& problem,
                                const PrimalState& state);

/// Preconditioned primal-dual iteration for the convex subproblem with the
/// dictionary fixed. Warm-starts from (primal, dual) and mutates them;
/// stops at max_iters or when the primal relative change drops to inner_tol.
InnerPhaseReport solve_inner(const SeparationProblem& problem,
                             const Dictionary& dict, PrimalState& primal,
                             DualState& dual, int max_iters,
                             double inner_tol = 1e-6);

/// Accelerated projected-gradient pass on the dictionary with the
/// coefficients fixed; returns dict_init untouched when every map is zero.
Dictionary update_dictionary(const VideoTensor& f, const CoefficientStack& a,
                             const Dictionary& dict_init, int iters = 10);

/// Alternating minimization: solve_inner then update_dictionary until both
/// outer relative-change criteria meet outer_tol or max_outer is reached.
/// Under ablation runs exactly one inner phase.
SeparationResult run_alm(const SeparationProblem& problem,
                         const SolveOptions& opts = {});

/// One long inner solve with the dictionary frozen; applies the StaticScene
/// exactness pass (temporal mean broadcast). cap = 0 returns the input
/// unchanged.
SeparationResult final_refinement(const SeparationProblem& problem,
                                  SeparationResult result, int cap,
                                  double inner_tol = 0.0);

/// Checkpoint: primal + dual + dictionary, resumable by final_refinement.
void save_checkpoint(const SeparationResult& result,
                     const std::filesystem::path& path);
SeparationResult load_checkpoint(const std::filesystem::path& path);

}  // namespace csrfbs
