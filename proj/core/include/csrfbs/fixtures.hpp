#pragma once

#include <string>

#include "csrfbs/video.hpp"

namespace csrfbs {

/// Synthetic scene with exact ground truth: clean = foreground + background.
struct Fixture {
    std::string name;
    VideoTensor foreground;  // additive bright objects, zero elsewhere
    VideoTensor background;  // static textured scene

    VideoTensor clean() const;
};

/// Moving bright square over a static textured background.
Fixture make_moving_square(int n1, int n2, int n3, int obj, double amplitude,
                           std::uint64_t seed);

/// Moving bright disc variant.
Fixture make_moving_disc(int n1, int n2, int n3, int radius, double amplitude,
                         std::uint64_t seed);

/// Named builtins: "squares32" (32x32x10), "squares64" (64x64x20),
/// "discs32", "discs64". Throws on unknown names.
Fixture builtin_fixture(const std::string& name);
bool is_builtin_fixture(const std::string& name);

}  // namespace csrfbs
