#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Core>

#include "csrfbs/video.hpp"

namespace csrfbs {

/// Small 2-D filters shared across frames. Every filter stays inside the
/// unit l2 ball; the solver re-projects after each update.
struct Dictionary {
    std::vector<Eigen::MatrixXd> filters;

    int count() const { return static_cast<int>(filters.size()); }
};

/// One video-sized sparse coefficient map per filter.
struct CoefficientStack {
    std::vector<VideoTensor> maps;

    int count() const { return static_cast<int>(maps.size()); }
};

struct CsrConfig {
    int filter_count = 8;
    int filter_size = 9;
    double lambda1 = 0.05;
    std::uint64_t init_seed = 0;
};

/// Sum of per-filter circular convolutions; bilinear in (dict, coeffs).
VideoTensor reconstruct(const Dictionary& dict, const CoefficientStack& coeffs);

/// 0.5 * || f - reconstruct(dict, coeffs) ||_2^2.
double csr_data_term(const VideoTensor& f, const Dictionary& dict,
                     const CoefficientStack& coeffs);

/// Seeded Gaussian filters projected onto the unit ball. Deterministic.
Dictionary init_dictionary(const CsrConfig& cfg);

CoefficientStack zero_coefficients(int filter_count, int n1, int n2, int n3);

/// Gradient of the data term with respect to each filter: the per-frame
/// circular correlation of a_d with the residual, accumulated over frames
/// and cropped to the filter support, negated.
std::vector<Eigen::MatrixXd> csr_gradient_d(const VideoTensor& f,
                                            const Dictionary& dict,
                                            const CoefficientStack& coeffs);

/// Dictionary file: magic "CFBD", u32 version=1, u32 count, then per filter
/// u32 rows, u32 cols and rows*cols little-endian float32 (column-major).
void save_dictionary(const Dictionary& dict, const std::filesystem::path& path);
Dictionary load_dictionary(const std::filesystem::path& path);

/// Montage PGM of all filters, each tile min-max normalized.
void dump_dictionary_image(const Dictionary& dict,
                           const std::filesystem::path& path);

}  // namespace csrfbs
