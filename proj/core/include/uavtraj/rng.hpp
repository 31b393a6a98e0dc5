#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace uavtraj {

/// Deterministic random stream used by every stochastic component.
///
/// All draws go through the raw mt19937_64 engine, whose output is pinned by
/// the standard; the std::*_distribution adapters are not reproducible across
/// library implementations, so uniforms and normals are derived by hand here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1); redraws the (measure-zero) exact zero so
    /// callers can rely on strictly positive values.
    double uniform_pos() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        return u;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Uniform integer in [0, n); n must be positive.
    int below(int n) {
        return std::min(static_cast<int>(uniform() * static_cast<double>(n)), n - 1);
    }

    /// -1.0 or +1.0 with equal probability.
    double sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

    /// Standard normal deviate via Box-Muller on raw uniforms.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double angle = 2.0 * pi * uniform();
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Fisher-Yates permutation of {0, ..., n-1}.
    std::vector<int> permutation(int n) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(below(i + 1))]);
        }
        return order;
    }

private:
    static constexpr double pi = 3.14159265358979323846;

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace uavtraj
