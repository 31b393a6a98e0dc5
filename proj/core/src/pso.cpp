#include <algorithm>
#include <vector>

#include "run_recorder.hpp"
#include "uavtraj/baselines.hpp"

namespace uavtraj {

/// Global-best particle swarm with constriction-style coefficients, fresh
/// cognitive/social draws per dimension and synchronous best updates.
RunResult run_pso(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective) {
    validate(cfg);
    const auto params = resolved_params(cfg);
    const double inertia = params.at("inertia");
    const double cognitive = params.at("cognitive");
    const double social = params.at("social");

    detail::RunRecorder recorder;
    const std::size_t n = static_cast<std::size_t>(cfg.population);
    const std::size_t dim = space.lower.size();
    Rng rng(cfg.seed);

    std::vector<std::vector<double>> position(n);
    std::vector<std::vector<double>> velocity(n, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> personal_best(n);
    std::vector<double> personal_best_cost(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[p] = uniform_point(space, rng);
        personal_best[p] = position[p];
        personal_best_cost[p] = recorder.evaluate(objective, position[p]);
    }

    for (int t = 1; t <= cfg.iterations; ++t) {
        // global best frozen for the whole iteration (synchronous update)
        const std::vector<double> gbest = recorder.best_vector();
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                velocity[p][d] = inertia * velocity[p][d] +
                                 cognitive * r1 * (personal_best[p][d] - position[p][d]) +
                                 social * r2 * (gbest[d] - position[p][d]);
                position[p][d] = std::clamp(position[p][d] + velocity[p][d], space.lower[d],
                                            space.upper[d]);
            }
            const double cost = recorder.evaluate(objective, position[p]);
            if (cost < personal_best_cost[p]) {
                personal_best_cost[p] = cost;
                personal_best[p] = position[p];
            }
        }
        recorder.close_iteration(position);
    }
    return recorder.take();
}

}  // namespace uavtraj
