#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "run_recorder.hpp"
#include "uavtraj/baselines.hpp"

namespace uavtraj {

namespace {

/// The three running leaders of the pack, ordered best to third-best.
struct Leaders {
    double alpha_cost = std::numeric_limits<double>::infinity();
    double beta_cost = std::numeric_limits<double>::infinity();
    double delta_cost = std::numeric_limits<double>::infinity();
    std::vector<double> alpha, beta, delta;

    void offer(double cost, const std::vector<double>& x) {
        if (cost < alpha_cost) {
            delta_cost = beta_cost;
            delta = beta;
            beta_cost = alpha_cost;
            beta = alpha;
            alpha_cost = cost;
            alpha = x;
        } else if (cost > alpha_cost && cost < beta_cost) {
            delta_cost = beta_cost;
            delta = beta;
            beta_cost = cost;
            beta = x;
        } else if (cost > beta_cost && cost < delta_cost) {
            delta_cost = cost;
            delta = x;
        }
    }
};

}  // namespace

/// Grey-wolf pack search: every wolf steps to the average of three leader
/// encirclements while the control parameter decays linearly from 2 to 0.
RunResult run_gwo(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective) {
    validate(cfg);
    detail::RunRecorder recorder;
    const std::size_t n = static_cast<std::size_t>(cfg.population);
    const std::size_t dim = space.lower.size();
    Rng rng(cfg.seed);

    std::vector<std::vector<double>> position(n);
    std::vector<double> cost(n);
    Leaders leaders;
    for (std::size_t p = 0; p < n; ++p) {
        position[p] = uniform_point(space, rng);
        cost[p] = recorder.evaluate(objective, position[p]);
        leaders.offer(cost[p], position[p]);
    }
    // tiny packs or all-equal costs leave trailing slots unfilled; duplicate down
    if (leaders.beta.empty()) {
        leaders.beta = leaders.alpha;
        leaders.beta_cost = leaders.alpha_cost;
    }
    if (leaders.delta.empty()) {
        leaders.delta = leaders.beta;
        leaders.delta_cost = leaders.beta_cost;
    }

    for (int t = 1; t <= cfg.iterations; ++t) {
        const double a = 2.0 * (1.0 - static_cast<double>(t) / cfg.iterations);
        const Leaders frozen = leaders;  // synchronous leader updates
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t d = 0; d < dim; ++d) {
                double sum = 0.0;
                for (const std::vector<double>* leader : {&frozen.alpha, &frozen.beta, &frozen.delta}) {
                    const double control = 2.0 * a * rng.uniform() - a;
                    const double sweep = 2.0 * rng.uniform();
                    const double pull = std::abs(sweep * (*leader)[d] - position[p][d]);
                    sum += (*leader)[d] - control * pull;
                }
                position[p][d] = std::clamp(sum / 3.0, space.lower[d], space.upper[d]);
            }
            cost[p] = recorder.evaluate(objective, position[p]);
        }
        for (std::size_t p = 0; p < n; ++p) leaders.offer(cost[p], position[p]);
        recorder.close_iteration(position);
    }
    return recorder.take();
}

}  // namespace uavtraj
