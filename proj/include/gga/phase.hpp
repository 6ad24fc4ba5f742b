#pragma once

#include <cmath>
#include <numbers>

namespace gga {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Wraps an angle onto the principal branch (-pi, pi]. Note -pi maps to +pi.
inline double principal_phase(double theta) {
    double y = std::fmod(theta, two_pi);
    if (y <= -pi) {
        y += two_pi;
    } else if (y > pi) {
        y -= two_pi;
    }
    return y;
}

/// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double theta) {
    double y = std::fmod(theta, two_pi);
    if (y < 0.0) {
        y += two_pi;
    }
    return y;
}

}  // namespace gga
