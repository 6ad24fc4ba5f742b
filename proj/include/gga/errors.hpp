#pragma once

#include <stdexcept>
#include <string>

namespace gga {

/// The kernel spectrum is (numerically) twofold degenerate. This happens
/// exactly at beta = delta = -1, where the kernel is the identity and the
/// closed-form eigenvector expression degenerates to 0/0; iterative
/// evolution must be used instead of the spectral path.
class DegenerateSpectrum : public std::runtime_error {
public:
    explicit DegenerateSpectrum(double gap)
        : std::runtime_error(
              "degenerate spectrum (the beta = delta = -1 identity kernel): "
              "|xi1 - xi2| = " +
              std::to_string(gap)),
          gap_(gap) {}
    double gap() const noexcept { return gap_; }

private:
    double gap_;
};

/// The eigenphase gap vanishes: the kernel applies no rotation, so the
/// search never progresses and no step count exists.
class ZeroPhaseGap : public std::runtime_error {
public:
    explicit ZeroPhaseGap(double delta_omega)
        : std::runtime_error("zero phase gap: |delta_omega| = " +
                             std::to_string(delta_omega) +
                             " < 1e-13, the kernel applies no rotation") {}
};

/// cos(t/2) ~ 0 makes the large-N step-count formula divide by zero.
class DivergentSteps : public std::runtime_error {
public:
    explicit DivergentSteps(double t)
        : std::runtime_error("divergent step count: cos(t/2) ~ 0 at t = " +
                             std::to_string(t)) {}
};

/// The alignment function has constant sign on the search bracket.
class NoRoot : public std::runtime_error {
public:
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

class LengthMismatch : public std::invalid_argument {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("distribution lengths differ: " +
                                std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(int a, int b)
        : std::invalid_argument("distribution dimensions differ: N = " +
                                std::to_string(a) + " vs " + std::to_string(b)) {}
};

class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace gga
