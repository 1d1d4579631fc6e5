#include "csrfbs/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace csrfbs {

namespace {

// PGM allows whitespace + '#' comments between header tokens.
int next_token(std::istream& is) {
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = is.get();
    }
    if (c == EOF) throw std::runtime_error("pgm: truncated header");
    long value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = is.get();
    }
    if (!any) throw std::runtime_error("pgm: malformed header token");
    return static_cast<int>(value);
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open image: " + path.string());
    char m0 = 0, m1 = 0;
    is.get(m0);
    is.get(m1);
    if (m0 != 'P') throw std::runtime_error("not a PGM file: " + path.string());
    if (m1 == '6' || m1 == '3')
        throw std::runtime_error("color images are rejected: " + path.string());
    if (m1 != '5')
        throw std::runtime_error("unsupported PGM variant: " + path.string());

    GrayImage img;
    img.cols = next_token(is);
    img.rows = next_token(is);
    const int maxval = next_token(is);
    if (maxval <= 0 || maxval > 65535)
        throw std::runtime_error("pgm: invalid maxval");
    img.container_max = maxval <= 255 ? 255 : 65535;

    const std::size_t count = static_cast<std::size_t>(img.rows) * img.cols;
    img.pixels.resize(count);
    if (maxval <= 255) {
        std::vector<unsigned char> raw(count);
        is.read(reinterpret_cast<char*>(raw.data()),
                static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(is.gcount()) != count)
            throw std::runtime_error("pgm: truncated payload: " + path.string());
        for (std::size_t i = 0; i < count; ++i) img.pixels[i] = raw[i];
    } else {
        // 16-bit PGM is big-endian
        std::vector<unsigned char> raw(count * 2);
        is.read(reinterpret_cast<char*>(raw.data()),
                static_cast<std::streamsize>(count * 2));
        if (static_cast<std::size_t>(is.gcount()) != count * 2)
            throw std::runtime_error("pgm: truncated payload: " + path.string());
        for (std::size_t i = 0; i < count; ++i)
            img.pixels[i] =
                static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
    }
    return img;
}

void write_pgm(const Eigen::MatrixXd& frame, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write image: " + path.string());
    os << "P5\n" << frame.cols() << " " << frame.rows() << "\n255\n";
    std::vector<unsigned char> raw(static_cast<std::size_t>(frame.size()));
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < frame.rows(); ++r) {
        for (Eigen::Index c = 0; c < frame.cols(); ++c) {
            const double v = std::clamp(frame(r, c), 0.0, 1.0);
            raw[idx++] = static_cast<unsigned char>(v * 255.0 + 0.5);
        }
    }
    os.write(reinterpret_cast<const char*>(raw.data()),
             static_cast<std::streamsize>(raw.size()));
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace csrfbs
