#include "csrfbs/video.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "csrfbs/image_io.hpp"

namespace csrfbs {

namespace detail {
void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}
}  // namespace detail

VideoTensor::VideoTensor(int n1, int n2, int n3)
    : n1_(n1), n2_(n2), n3_(n3),
      data_(static_cast<std::size_t>(n1) * n2 * n3, 0.0) {
    detail::require(n1 > 0 && n2 > 0 && n3 > 0, "VideoTensor: dims must be positive");
}

VideoTensor::VideoTensor(int n1, int n2, int n3, std::vector<double> data)
    : n1_(n1), n2_(n2), n3_(n3), data_(std::move(data)) {
    detail::require(n1 > 0 && n2 > 0 && n3 > 0, "VideoTensor: dims must be positive");
    detail::require(data_.size() == static_cast<std::size_t>(n1) * n2 * n3,
                    "VideoTensor: data length does not match dims");
}

bool VideoTensor::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double x) { return std::isfinite(x); });
}

VideoTensor vectorize(const std::vector<Eigen::MatrixXd>& frames) {
    detail::require(!frames.empty(), "vectorize: empty frame list");
    const int n1 = static_cast<int>(frames.front().rows());
    const int n2 = static_cast<int>(frames.front().cols());
    detail::require(n1 > 0 && n2 > 0, "vectorize: empty frame");
    for (const auto& fr : frames) {
        detail::require(fr.rows() == n1 && fr.cols() == n2,
                        "vectorize: frame dimension mismatch");
    }
    VideoTensor v(n1, n2, static_cast<int>(frames.size()));
    double* out = v.data().data();
    for (const auto& fr : frames) {
        // Eigen matrices are column-major; one frame is a contiguous block.
        std::memcpy(out, fr.data(), sizeof(double) * v.frame_size());
        out += v.frame_size();
    }
    return v;
}

Eigen::MatrixXd frame_at(const VideoTensor& v, int k) {
    detail::require(k >= 1 && k <= v.n3(), "frame_at: frame index out of range");
    Eigen::MatrixXd fr(v.n1(), v.n2());
    std::memcpy(fr.data(), v.data().data() + (k - 1) * v.frame_size(),
                sizeof(double) * v.frame_size());
    return fr;
}

namespace {

constexpr char kMagic[4] = {'C', 'F', 'B', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t x) {
    unsigned char b[4] = {static_cast<unsigned char>(x & 0xff),
                          static_cast<unsigned char>((x >> 8) & 0xff),
                          static_cast<unsigned char>((x >> 16) & 0xff),
                          static_cast<unsigned char>((x >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("video file: truncated header");
    return static_cast<std::uint32_t>(b[0]) |
           (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

static_assert(std::endian::native == std::endian::little,
              "payload serialization assumes a little-endian host");

VideoTensor load_raw(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open video file: " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("video file: bad magic: " + path.string());
    const std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw std::runtime_error("video file: unsupported version");
    const std::uint32_t n1 = get_u32(is);
    const std::uint32_t n2 = get_u32(is);
    const std::uint32_t n3 = get_u32(is);
    if (n1 == 0 || n2 == 0 || n3 == 0)
        throw std::runtime_error("video file: zero dimension");
    const std::size_t count = static_cast<std::size_t>(n1) * n2 * n3;
    std::vector<float> payload(count);
    is.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    if (static_cast<std::size_t>(is.gcount()) != count * sizeof(float))
        throw std::runtime_error("video file: truncated payload");
    std::vector<double> data(count);
    for (std::size_t i = 0; i < count; ++i) data[i] = payload[i];
    VideoTensor v(static_cast<int>(n1), static_cast<int>(n2),
                  static_cast<int>(n3), std::move(data));
    if (!v.all_finite())
        throw std::runtime_error("video file: non-finite values");
    return v;
}

VideoTensor load_image_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext == ".pgm") files.push_back(entry.path());
    }
    if (files.empty())
        throw std::runtime_error("no .pgm frames in directory: " + dir.string());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) {
                  return a.filename().string() < b.filename().string();
              });

    std::vector<Eigen::MatrixXd> frames;
    frames.reserve(files.size());
    for (const auto& file : files) {
        const GrayImage img = read_pgm(file);
        if (!frames.empty() &&
            (img.rows != frames.front().rows() || img.cols != frames.front().cols()))
            throw std::runtime_error("inconsistent image sizes in: " + dir.string());
        Eigen::MatrixXd fr(img.rows, img.cols);
        const double scale = 1.0 / img.container_max;
        for (int r = 0; r < img.rows; ++r)
            for (int c = 0; c < img.cols; ++c)
                fr(r, c) = img.pixels[static_cast<std::size_t>(r) * img.cols + c] * scale;
        frames.push_back(std::move(fr));
    }
    return vectorize(frames);
}

}  // namespace

void save_video(const VideoTensor& v, const std::filesystem::path& path) {
    detail::require(v.size() > 0, "save_video: empty tensor");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write video file: " + path.string());
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(v.n1()));
    put_u32(os, static_cast<std::uint32_t>(v.n2()));
    put_u32(os, static_cast<std::uint32_t>(v.n3()));
    std::vector<float> payload(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        payload[i] = static_cast<float>(v.data()[i]);
    os.write(reinterpret_cast<const char*>(payload.data()),
             static_cast<std::streamsize>(payload.size() * sizeof(float)));
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

VideoTensor load_video(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) return load_image_dir(path);
    return load_raw(path);
}

}  // namespace csrfbs
