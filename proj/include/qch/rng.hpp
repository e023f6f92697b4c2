#pragma once

#include <cmath>
#include <cstdint>

#include "qch/linalg.hpp"

namespace qch {

/// Deterministic splitmix64 generator.
///
/// Self-contained on purpose: <random> distributions are implementation
/// defined, and the fuzz reports promise bit-identical output for a fixed
/// seed. Statistical quality is ample for instance sampling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Integer in [lo, hi] inclusive.
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller (no cached spare).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 == 0.0)
            u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Vec normal_vec(int n) {
        Vec v(n);
        for (double& x : v)
            x = normal();
        return v;
    }

    /// Uniform direction on the unit sphere in R^n.
    Vec unit_vec(int n) {
        for (;;) {
            Vec v = normal_vec(n);
            double s = norm(v);
            if (s > 1e-6)
                return scaled(std::move(v), 1.0 / s);
        }
    }

  private:
    std::uint64_t state_;
};

/// Decorrelated per-trial seed derived from a master seed.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace qch
