#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace csrfbs {

/**
 * Grayscale video as a flat vector of doubles.
 *
 * Layout is frame-major with column-major frames: element (i, j) of frame k
 * (all 0-based) lives at k*n1*n2 + j*n1 + i. This is the one canonical
 * vectorization used across the whole toolkit; every linear operator relies
 * on it. Instances are plain values; treat them as immutable once shared
 * across threads.
 */
class VideoTensor {
public:
    VideoTensor() = default;
    VideoTensor(int n1, int n2, int n3);
    VideoTensor(int n1, int n2, int n3, std::vector<double> data);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int n3() const { return n3_; }
    std::size_t size() const { return data_.size(); }

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(k) * frame_size() +
               static_cast<std::size_t>(j) * n1_ + i;
    }
    std::size_t frame_size() const {
        return static_cast<std::size_t>(n1_) * n2_;
    }

    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
    double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool same_shape(const VideoTensor& other) const {
        return n1_ == other.n1_ && n2_ == other.n2_ && n3_ == other.n3_;
    }
    bool all_finite() const;

private:
    int n1_ = 0;
    int n2_ = 0;
    int n3_ = 0;
    std::vector<double> data_;
};

/// Stack frames (all n1 x n2) into the canonical vectorized layout.
/// Throws std::invalid_argument on dimension mismatch or an empty list.
VideoTensor vectorize(const std::vector<Eigen::MatrixXd>& frames);

/// Extract frame k (1-based, 1 <= k <= n3); exact inverse of vectorize.
Eigen::MatrixXd frame_at(const VideoTensor& v, int k);

/**
 * Raw video file: magic "CFBS", u32 version=1, u32 n1, u32 n2, u32 n3,
 * then n1*n2*n3 little-endian IEEE float32 in the canonical layout.
 * load(save(x)) reproduces the float32 payload exactly.
 */
void save_video(const VideoTensor& v, const std::filesystem::path& path);

/// Load a raw video file, or a directory of equally-sized 8/16-bit
/// grayscale PGM images (lexicographic frame order, values divided by the
/// container maximum 255 or 65535).
VideoTensor load_video(const std::filesystem::path& path);

namespace detail {
void require(bool cond, const std::string& msg);
}

}  // namespace csrfbs
