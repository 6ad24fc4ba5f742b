#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gga/phase.hpp"

namespace gga {

/// Knobs of a generalized Grover run: database size N and the phase angles
/// t, g defining the kernel parameters beta = e^{it}, delta = e^{ig}.
/// Angles are stored wrapped into [0, 2*pi).
struct GGAParams {
    int n;
    double t;
    double g;

    static constexpr double angle_tol = 1e-12;

    GGAParams(int n_, double t_, double g_)
        : n(n_), t(wrap_two_pi(t_)), g(wrap_two_pi(g_)) {
        if (n_ < 2) {
            throw std::invalid_argument("GGAParams: N must be >= 2");
        }
        if (!std::isfinite(t_) || !std::isfinite(g_)) {
            throw std::invalid_argument("GGAParams: angles must be finite");
        }
    }

    std::complex<double> beta() const { return {std::cos(t), std::sin(t)}; }
    std::complex<double> delta() const { return {std::cos(g), std::sin(g)}; }

    /// beta == delta away from the beta = delta = -1 identity point.
    bool is_efficient() const {
        return std::abs(principal_phase(t - g)) <= angle_tol &&
               std::abs(principal_phase(t - pi)) > angle_tol;
    }
};

}  // namespace gga
