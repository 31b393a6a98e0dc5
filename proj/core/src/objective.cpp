#include "uavtraj/objective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace uavtraj {

namespace {

void check_length(std::span<const double> v, const Scenario& s) {
    const std::size_t expected = 2u * static_cast<std::size_t>(s.num_control_points);
    if (v.size() != expected) {
        throw std::invalid_argument("decision vector has " + std::to_string(v.size()) +
                                    " entries, scenario needs " + std::to_string(expected));
    }
}

Point2 clamped_control_point(std::span<const double> v, std::size_t i, const Scenario& s) {
    return {std::clamp(v[2 * i], s.lower_bound.x, s.upper_bound.x),
            std::clamp(v[2 * i + 1], s.lower_bound.y, s.upper_bound.y)};
}

}  // namespace

SearchSpace search_space(const Scenario& s) {
    SearchSpace space;
    const std::size_t n = static_cast<std::size_t>(s.num_control_points);
    space.lower.reserve(2 * n);
    space.upper.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        space.lower.push_back(s.lower_bound.x);
        space.upper.push_back(s.upper_bound.x);
        space.lower.push_back(s.lower_bound.y);
        space.upper.push_back(s.upper_bound.y);
    }
    return space;
}

Trajectory decode(std::span<const double> v, const Scenario& s) {
    check_length(v, s);
    Trajectory t;
    t.start = s.start;
    t.destination = s.destination;
    const std::size_t n = static_cast<std::size_t>(s.num_control_points);
    t.control_points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.control_points.push_back(clamped_control_point(v, i, s));
    }
    return t;
}

std::vector<double> encode(const Trajectory& t) {
    std::vector<double> v;
    v.reserve(2 * t.control_points.size());
    for (const Point2& p : t.control_points) {
        v.push_back(p.x);
        v.push_back(p.y);
    }
    return v;
}

CostBreakdown evaluate(std::span<const double> v, const Scenario& s, double penalty_weight) {
    check_length(v, s);
    const std::size_t n = static_cast<std::size_t>(s.num_control_points);
    CostBreakdown cost;
    Point2 prev = s.start;
    for (std::size_t i = 0; i <= n; ++i) {
        const Point2 next = (i < n) ? clamped_control_point(v, i, s) : s.destination;
        cost.path_length += distance(prev, next);
        const Segment seg{prev, next};
        for (const CircleObstacle& o : s.obstacles) {
            cost.violation += segment_circle_penetration(seg, o);
        }
        prev = next;
    }
    cost.total = cost.path_length + penalty_weight * cost.violation;
    return cost;
}

Objective make_objective(Scenario s, double penalty_weight) {
    return [scenario = std::move(s), penalty_weight](std::span<const double> v) {
        return evaluate(v, scenario, penalty_weight).total;
    };
}

}  // namespace uavtraj
