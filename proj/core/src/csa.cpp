#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "run_recorder.hpp"
#include "uavtraj/baselines.hpp"

namespace uavtraj {

/// Cuckoo search: heavy-tailed steps around the best nest plus abandonment of
/// a fixed fraction of the worst nests each iteration.
RunResult run_csa(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective) {
    validate(cfg);
    const auto params = resolved_params(cfg);
    const double discovery = params.at("discovery");
    const double levy_exponent = params.at("levy_exponent");
    const double step_scale = params.at("step_scale");
    if (!(discovery >= 0.0 && discovery <= 1.0)) {
        throw std::invalid_argument("csa: discovery must be in [0, 1]");
    }
    if (!(levy_exponent > 0.0 && levy_exponent <= 2.0)) {
        throw std::invalid_argument("csa: levy_exponent must be in (0, 2]");
    }
    if (!(step_scale > 0.0)) throw std::invalid_argument("csa: step_scale must be > 0");

    detail::RunRecorder recorder;
    const std::size_t n = static_cast<std::size_t>(cfg.population);
    const std::size_t dim = space.lower.size();
    Rng rng(cfg.seed);

    std::vector<std::vector<double>> nest(n);
    std::vector<double> cost(n);
    for (std::size_t p = 0; p < n; ++p) {
        nest[p] = uniform_point(space, rng);
        cost[p] = recorder.evaluate(objective, nest[p]);
    }

    std::vector<double> trial(dim);
    const int abandoned = static_cast<int>(std::floor(discovery * cfg.population));

    for (int t = 1; t <= cfg.iterations; ++t) {
        const std::vector<double> best = recorder.best_vector();

        // heavy-tailed walk biased by the distance to the best nest
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double step = levy_step(levy_exponent, rng);
                trial[d] = std::clamp(nest[p][d] + step_scale * step * (nest[p][d] - best[d]),
                                      space.lower[d], space.upper[d]);
            }
            const double trial_cost = recorder.evaluate(objective, trial);
            if (trial_cost < cost[p]) {
                cost[p] = trial_cost;
                nest[p] = trial;
            }
        }

        // abandon the worst fraction: fresh uniform nests
        if (abandoned > 0) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (cost[static_cast<std::size_t>(a)] != cost[static_cast<std::size_t>(b)]) {
                    return cost[static_cast<std::size_t>(a)] > cost[static_cast<std::size_t>(b)];
                }
                return a < b;
            });
            for (int i = 0; i < abandoned; ++i) {
                const std::size_t p = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
                nest[p] = uniform_point(space, rng);
                cost[p] = recorder.evaluate(objective, nest[p]);
            }
        }
        recorder.close_iteration(nest);
    }
    return recorder.take();
}

}  // namespace uavtraj
