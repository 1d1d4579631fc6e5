#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "csrfbs/csr.hpp"
#include "csrfbs/noise.hpp"
#include "csrfbs/solver.hpp"

namespace csrfbs {

/// Minimal INI reader: [section], key = value, '#'/';' comments.
class IniFile {
public:
    static IniFile parse_file(const std::filesystem::path& path);
    static IniFile parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback = "") const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback) const;
    bool get_bool(const std::string& section, const std::string& key,
                  bool fallback) const;
    std::vector<std::string> get_list(const std::string& section,
                                      const std::string& key) const;
    const std::map<std::string, std::map<std::string, std::string>>& sections()
        const {
        return values_;
    }

private:
    std::map<std::string, std::map<std::string, std::string>> values_;
};

/**
 * One run configuration driving every pipeline command. Loaded from the
 * INI file, then optionally overridden by CLI flags. noise_case 1-3 applies
 * the preset degradations; 0 leaves the explicit noise fields in charge.
 */
struct RunConfig {
    std::string input;                       // path or builtin fixture name
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 1;

    int noise_case = 0;
    NoiseSpec noise;

    double lambda1 = 0.05;
    double lambda2 = 0.05;
    double eta_f = -1.0;                     // <0: take from manifest
    std::string background = "static";       // "lowrank" | "static"
    double lambda_lr = 0.1;
    std::string stripe_mode = "auto";        // auto|off|time_invariant|time_varying
    bool ablation = false;
    bool save_coefficients = false;

    CsrConfig csr;
    SolveOptions solve;

    std::vector<std::string> fixtures;       // experiment inputs
    std::vector<int> cases;                  // experiment noise cases
    std::vector<std::string> models;         // experiment backgrounds
    std::map<std::string, double> thresholds;  // e.g. min_auc_f, min_mpsnr_b

    /// Resolve the case preset into the explicit noise fields.
    NoiseSpec resolved_noise() const;
    /// Resolve "auto" stripe mode against the noise spec.
    StripeMode resolved_stripe_mode() const;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(const IniFile& ini);

}  // namespace csrfbs
