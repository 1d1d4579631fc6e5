#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "csrfbs/config.hpp"

namespace csrfbs {

struct DegradeOutputs {
    std::filesystem::path dir;
    std::filesystem::path observed;
    std::filesystem::path manifest;
    double eps = 0.0;
    double eta_s = 0.0;
};

/// Degrade the input video, write the observed video, the exact sparse and
/// stripe fields, ground truth when the input is a builtin fixture, and a
/// manifest with the resolved constraint radii.
DegradeOutputs cmd_degrade(const RunConfig& config);

struct SeparateOutputs {
    std::filesystem::path dir;
    std::filesystem::path report;
    int outer_iters = 0;
    ConstraintSlacks slacks;
};

/// Run the full solver on a degraded directory and write f, b, s, l, the
/// dictionary (raw + montage image) and the solver report.
SeparateOutputs cmd_separate(const RunConfig& config);

struct EvaluateOutputs {
    std::filesystem::path dir;
    std::map<std::string, double> metrics;  // mpsnr_f mssim_f auc_f mpsnr_b mssim_b measure
};

/// Score the separated components against the references and emit the text
/// + JSON reports and frame dumps.
EvaluateOutputs cmd_evaluate(const RunConfig& config);

struct ExperimentRow {
    std::string fixture;
    int noise_case = 0;
    std::string model;
    std::map<std::string, double> metrics;
    bool ok = false;
    std::string error;
};

struct ExperimentSummary {
    std::vector<ExperimentRow> rows;
    bool thresholds_ok = true;
    std::filesystem::path summary_text;
    std::filesystem::path summary_json;
};

/// degrade -> separate -> evaluate for every (fixture, case, model) triple,
/// in a worker pool capped by CSRFBS_THREADS. Deterministic per-triple seeds.
ExperimentSummary cmd_experiment(const RunConfig& config);

}  // namespace csrfbs
