#pragma once

#include <span>
#include <vector>

namespace uavtraj {

/// 2-D coordinate in workspace kilometres.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

/// Circular no-fly zone. The inflated disk of radius `radius + safety_margin`
/// is what a path must stay out of.
struct CircleObstacle {
    Point2 center;
    double radius = 0.0;
    double safety_margin = 0.0;

    double effective_radius() const { return radius + safety_margin; }
};

inline bool operator==(const CircleObstacle& a, const CircleObstacle& b) {
    return a.center == b.center && a.radius == b.radius && a.safety_margin == b.safety_margin;
}

struct Segment {
    Point2 a;
    Point2 b;
};

/// Flight path: fixed start, free control points, fixed destination.
struct Trajectory {
    Point2 start;
    std::vector<Point2> control_points;
    Point2 destination;
};

/// Euclidean distance between two points.
double distance(const Point2& p, const Point2& q);

/// Minimum distance from a segment to a point (closest-point projection with
/// the parameter clamped to [0, 1]; a zero-length segment degrades to a point).
double segment_point_distance(const Segment& s, const Point2& p);

/// Depth by which the segment enters the inflated disk: max(0, r_eff - d_min).
/// Zero means no violation; tangent contact counts as collision-free.
double segment_circle_penetration(const Segment& s, const CircleObstacle& o);

/// Sum of penetration depths over every path segment and every obstacle.
/// Exactly zero when the whole path keeps clear of every inflated disk.
double trajectory_violation(const Trajectory& t, std::span<const CircleObstacle> obstacles);

/// Total polyline length start -> control points -> destination.
double trajectory_length(const Trajectory& t);

}  // namespace uavtraj
