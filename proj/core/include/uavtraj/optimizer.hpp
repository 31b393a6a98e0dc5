#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "uavtraj/rng.hpp"

namespace uavtraj {

/// Cost function over flat decision vectors; lower is better.
using Objective = std::function<double(std::span<const double>)>;

/// Axis-aligned box the optimizers search in.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    int dim() const { return static_cast<int>(lower.size()); }
};

/// Result schema shared by every optimizer.
struct RunResult {
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<double> best_vector;
    std::vector<double> history;    // best-so-far after each iteration; nonincreasing
    std::vector<double> diversity;  // population diversity at the end of each iteration
    double elapsed_seconds = 0.0;
    std::int64_t evaluations = 0;   // objective calls, including respawn re-evaluations
};

inline std::vector<double> uniform_point(const SearchSpace& space, Rng& rng) {
    std::vector<double> v(space.lower.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
        v[d] = space.lower[d] + rng.uniform() * (space.upper[d] - space.lower[d]);
    }
    return v;
}

inline void clamp_to(std::vector<double>& v, const SearchSpace& space) {
    for (std::size_t d = 0; d < v.size(); ++d) {
        v[d] = std::clamp(v[d], space.lower[d], space.upper[d]);
    }
}

}  // namespace uavtraj
