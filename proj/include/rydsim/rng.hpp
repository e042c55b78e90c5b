#pragma once

#include <cmath>
#include <cstdint>

#include "rydsim/core.hpp"

namespace rydsim {

// splitmix64; small, seedable, and good enough for Gaussian disorder draws.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1].
    double uniform()
    {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
    }

    // Standard normal via Box-Muller (pairs cached).
    double normal()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

  private:
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Substream seed for (grid point, trial); identical regardless of execution
// order, which is what makes campaigns bit-reproducible under any --jobs.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t grid_index,
                                std::uint64_t trial_index)
{
    SplitMix64 a(base_seed ^ 0x6a09e667f3bcc909ull);
    std::uint64_t s = a.next() ^ (grid_index * 0x9E3779B97F4A7C15ull);
    SplitMix64 b(s);
    return b.next() ^ (trial_index * 0xC2B2AE3D27D4EB4Full);
}

} // namespace rydsim
