#include "uavtraj/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace uavtraj {

namespace {

/// Applies `fn` to each consecutive segment of the path.
template <typename F>
void for_each_segment(const Trajectory& t, F&& fn) {
    Point2 prev = t.start;
    for (const Point2& c : t.control_points) {
        fn(Segment{prev, c});
        prev = c;
    }
    fn(Segment{prev, t.destination});
}

}  // namespace

double distance(const Point2& p, const Point2& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

double segment_point_distance(const Segment& s, const Point2& p) {
    const double ux = s.b.x - s.a.x;
    const double uy = s.b.y - s.a.y;
    const double len2 = ux * ux + uy * uy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - s.a.x) * ux + (p.y - s.a.y) * uy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    const double cx = s.a.x + t * ux - p.x;
    const double cy = s.a.y + t * uy - p.y;
    return std::sqrt(cx * cx + cy * cy);
}

double segment_circle_penetration(const Segment& s, const CircleObstacle& o) {
    return std::max(0.0, o.effective_radius() - segment_point_distance(s, o.center));
}

double trajectory_violation(const Trajectory& t, std::span<const CircleObstacle> obstacles) {
    double total = 0.0;
    for_each_segment(t, [&](const Segment& seg) {
        for (const CircleObstacle& o : obstacles) {
            total += segment_circle_penetration(seg, o);
        }
    });
    return total;
}

double trajectory_length(const Trajectory& t) {
    double total = 0.0;
    for_each_segment(t, [&](const Segment& seg) { total += distance(seg.a, seg.b); });
    return total;
}

}  // namespace uavtraj
