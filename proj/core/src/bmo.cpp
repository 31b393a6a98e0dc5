#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "run_recorder.hpp"
#include "uavtraj/baselines.hpp"

namespace uavtraj {

namespace {

/// Stable fitness-ascending order of `cost`, ties by original index.
std::vector<int> sorted_order(const std::vector<double>& cost) {
    std::vector<int> order(cost.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cost[static_cast<std::size_t>(a)] != cost[static_cast<std::size_t>(b)]) {
            return cost[static_cast<std::size_t>(a)] < cost[static_cast<std::size_t>(b)];
        }
        return a < b;
    });
    return order;
}

}  // namespace

/// Barnacle mating: parents are paired through two random permutations of the
/// fitness-sorted population. Nearby ranks blend by a shared random weight;
/// distant ranks fall back to a randomized copy of the second parent.
RunResult run_bmo(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective) {
    validate(cfg);
    const auto params = resolved_params(cfg);
    const int mating_range = static_cast<int>(std::lround(params.at("mating_range")));
    if (mating_range < 0) throw std::invalid_argument("bmo: mating_range must be >= 0");

    detail::RunRecorder recorder;
    const std::size_t n = static_cast<std::size_t>(cfg.population);
    const std::size_t dim = space.lower.size();
    Rng rng(cfg.seed);

    // population kept sorted by fitness (ascending) between iterations
    std::vector<std::vector<double>> position(n);
    std::vector<double> cost(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[p] = uniform_point(space, rng);
        cost[p] = recorder.evaluate(objective, position[p]);
    }
    {
        const std::vector<int> order = sorted_order(cost);
        std::vector<std::vector<double>> sorted_pos(n);
        std::vector<double> sorted_cost(n);
        for (std::size_t i = 0; i < n; ++i) {
            sorted_pos[i] = std::move(position[static_cast<std::size_t>(order[i])]);
            sorted_cost[i] = cost[static_cast<std::size_t>(order[i])];
        }
        position = std::move(sorted_pos);
        cost = std::move(sorted_cost);
    }

    std::vector<std::vector<double>> offspring(n, std::vector<double>(dim));
    std::vector<double> offspring_cost(n);

    for (int t = 1; t <= cfg.iterations; ++t) {
        const std::vector<int> dads = rng.permutation(cfg.population);
        const std::vector<int> mums = rng.permutation(cfg.population);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t dad = static_cast<std::size_t>(dads[i]);
            const std::size_t mum = static_cast<std::size_t>(mums[i]);
            if (std::abs(dads[i] - mums[i]) <= mating_range) {
                const double weight = rng.uniform();  // inheritance split, shared across dims
                for (std::size_t d = 0; d < dim; ++d) {
                    offspring[i][d] = weight * position[dad][d] + (1.0 - weight) * position[mum][d];
                }
            } else {
                // sperm-cast: randomized per-dimension copy of the mum
                for (std::size_t d = 0; d < dim; ++d) {
                    offspring[i][d] = rng.uniform() * position[mum][d];
                }
            }
            clamp_to(offspring[i], space);
            offspring_cost[i] = recorder.evaluate(objective, offspring[i]);
        }

        // elitist survivor selection over parents + offspring
        std::vector<std::vector<double>> merged_pos;
        merged_pos.reserve(2 * n);
        std::vector<double> merged_cost;
        merged_cost.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            merged_pos.push_back(std::move(position[i]));
            merged_cost.push_back(cost[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            merged_pos.push_back(std::move(offspring[i]));
            merged_cost.push_back(offspring_cost[i]);
        }
        const std::vector<int> order = sorted_order(merged_cost);
        for (std::size_t i = 0; i < n; ++i) {
            position[i] = std::move(merged_pos[static_cast<std::size_t>(order[i])]);
            cost[i] = merged_cost[static_cast<std::size_t>(order[i])];
        }
        for (std::size_t i = 0; i < n; ++i) {
            offspring[i].assign(dim, 0.0);  // restore storage moved out above
        }
        recorder.close_iteration(position);
    }
    return recorder.take();
}

}  // namespace uavtraj
