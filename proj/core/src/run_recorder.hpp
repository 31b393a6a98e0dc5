#pragma once

#include <chrono>
#include <span>
#include <vector>

#include "uavtraj/diagnostics.hpp"
#include "uavtraj/optimizer.hpp"

namespace uavtraj::detail {

/// Uniform RunResult bookkeeping shared by all optimizers: best-ever elitism,
/// evaluation counting, per-iteration history/diversity, wall-clock timing.
///
/// Every objective call goes through evaluate(), so the recorded best is the
/// minimum over all evaluations even when the evaluated candidate is later
/// discarded by the algorithm.
class RunRecorder {
public:
    RunRecorder() : start_(std::chrono::steady_clock::now()) {}

    double evaluate(const Objective& objective, std::span<const double> v) {
        const double cost = objective(v);
        ++result_.evaluations;
        if (cost < result_.best_cost) {
            result_.best_cost = cost;
            result_.best_vector.assign(v.begin(), v.end());
        }
        return cost;
    }

    double best_cost() const { return result_.best_cost; }
    const std::vector<double>& best_vector() const { return result_.best_vector; }

    void close_iteration(const std::vector<std::vector<double>>& positions) {
        result_.history.push_back(result_.best_cost);
        result_.diversity.push_back(population_diversity(positions));
    }

    RunResult take() {
        result_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

private:
    RunResult result_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace uavtraj::detail
