#pragma once

#include <span>
#include <vector>

#include "uavtraj/optimizer.hpp"
#include "uavtraj/scenario.hpp"

namespace uavtraj {

/// Cost terms for one decoded candidate.
struct CostBreakdown {
    double path_length = 0.0;  // km
    double violation = 0.0;    // km of accumulated penetration
    double total = 0.0;        // path_length + penalty_weight * violation
};

inline constexpr double default_penalty_weight = 100.0;  // cost per km of penetration

/// Search box for a scenario: 2 * num_control_points entries laid out as
/// [x1, y1, x2, y2, ...] over the workspace bounds.
SearchSpace search_space(const Scenario& s);

/// Decision vector -> trajectory; coordinates are clamped into the workspace.
/// Throws std::invalid_argument on a length mismatch.
Trajectory decode(std::span<const double> v, const Scenario& s);

/// Trajectory control points -> flat decision vector.
std::vector<double> encode(const Trajectory& t);

/// Penalized path cost of a decision vector. Collision-free candidates have
/// total == path_length exactly.
CostBreakdown evaluate(std::span<const double> v, const Scenario& s,
                       double penalty_weight = default_penalty_weight);

/// Objective closure over a scenario copy; returns CostBreakdown::total.
Objective make_objective(Scenario s, double penalty_weight = default_penalty_weight);

}  // namespace uavtraj
