#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Core>

namespace csrfbs {

/// A decoded grayscale image plus the container maximum it was stored with
/// (255 for 8-bit, 65535 for 16-bit).
struct GrayImage {
    int rows = 0;
    int cols = 0;
    int container_max = 255;
    std::vector<std::uint16_t> pixels;  // row-major
};

/// Read a binary PGM (P5). Color formats are rejected.
GrayImage read_pgm(const std::filesystem::path& path);

/// Write an 8-bit binary PGM. Values are clipped to [0, 1] then scaled by 255.
void write_pgm(const Eigen::MatrixXd& frame, const std::filesystem::path& path);

}  // namespace csrfbs
