#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rydsim {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index      = Eigen::Index;

inline constexpr Complex imag_unit{0.0, 1.0};
inline constexpr double  two_pi = 2.0 * std::numbers::pi;

// Unit conventions for scenario/config fields: frequencies are stored as
// f = x/2pi in MHz (the paper's "Omega/2pi" convention), times in us,
// distances in um. Propagation happens in SI (rad/s, s); the converters
// below are applied exactly once, at Hamiltonian assembly.
inline constexpr double mhz_to_rad = two_pi * 1e6;  // MHz -> rad/s
inline constexpr double us_to_s    = 1e-6;          // us  -> s

inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
inline constexpr double rb87_mass   = 1.44316e-25;   // kg

// Wrap an angle into (-pi, pi].
inline double principal_angle(double a)
{
    double r = std::remainder(a, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

// Distance between two angles on the circle, in [0, pi].
inline double phase_distance(double a, double b)
{
    return std::abs(principal_angle(a - b));
}

// FNV-1a, used for scenario hashes and per-trial seed derivation.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull)
{
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

} // namespace rydsim
