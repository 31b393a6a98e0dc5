#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavtraj/geometry.hpp"

namespace uavtraj {

/// Workspace definition: rectangular bounds, fixed endpoints, obstacle set and
/// the number of free control points a trajectory through it gets.
struct Scenario {
    std::string name;
    Point2 lower_bound;
    Point2 upper_bound;
    Point2 start;
    Point2 destination;
    std::vector<CircleObstacle> obstacles;
    int num_control_points = 3;
};

bool operator==(const Scenario& a, const Scenario& b);

/// The four builtin benchmark environments, ordered from scattered clutter to
/// a dense mixed field.
enum class ScenarioCase { ambient, constrict, tangle, complex };

ScenarioCase parse_case(std::string_view tag);  // throws on an unknown tag
std::string_view case_name(ScenarioCase c);

/// Layout constants for the builtin generators. These describe the benchmark
/// configuration, not tunables: the compositional tests pin them.
namespace builtin_layout {
inline constexpr int ambient_obstacles = 7;
inline constexpr double ambient_radius_min = 0.4;
inline constexpr double ambient_radius_max = 1.0;
inline constexpr int constrict_obstacles = 15;
inline constexpr double constrict_radius = 0.5;
inline constexpr int tangle_chains = 3;
inline constexpr int chain_circles = 6;
inline constexpr double chain_radius = 0.35;
inline constexpr int complex_random_obstacles = 10;
inline constexpr int complex_chains = 2;
}  // namespace builtin_layout

/// Deterministic builtin workspace: the same (case, seed) always yields an
/// identical scenario, and every generated scenario admits at least one
/// collision-free polyline with the configured number of control points.
Scenario builtin_scenario(ScenarioCase c, std::uint64_t seed);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Stream forms used by save/load; `display_name` labels parse errors and
/// becomes the scenario name when the file carries no name comment.
Scenario read_scenario(std::istream& in, const std::string& display_name);
void write_scenario(const Scenario& s, std::ostream& out);

/// Throws std::runtime_error naming the offending field if any invariant is
/// violated: ordered bounds, endpoints inside the workspace and strictly
/// outside every inflated obstacle, positive radii, at least one control point.
void validate(const Scenario& s);

/// Searches a deterministic family of candidate polylines with exactly
/// `num_control_points` vertices and returns a collision-free one when found.
std::optional<Trajectory> find_free_trajectory(const Scenario& s);

}  // namespace uavtraj
