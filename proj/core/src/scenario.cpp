#include "uavtraj/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>

#include "uavtraj/rng.hpp"
#include "uavtraj/text.hpp"

namespace uavtraj {

namespace {

constexpr double endpoint_clearance = 0.35;  // free space kept around start/destination

bool inside_bounds(const Point2& p, const Scenario& s) {
    return p.x >= s.lower_bound.x && p.x <= s.upper_bound.x && p.y >= s.lower_bound.y &&
           p.y <= s.upper_bound.y;
}

std::optional<std::string> invariant_error(const Scenario& s) {
    const auto finite = [](const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); };
    if (!finite(s.lower_bound) || !finite(s.upper_bound)) return "bounds: coordinates must be finite";
    if (!(s.lower_bound.x < s.upper_bound.x) || !(s.lower_bound.y < s.upper_bound.y)) {
        return "bounds: lower bound must be strictly below upper bound in both axes";
    }
    if (s.num_control_points < 1) return "control_points: must be >= 1";
    if (!finite(s.start)) return "start: coordinates must be finite";
    if (!finite(s.destination)) return "dest: coordinates must be finite";
    if (!inside_bounds(s.start, s)) return "start: outside workspace bounds";
    if (!inside_bounds(s.destination, s)) return "dest: outside workspace bounds";
    for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
        const CircleObstacle& o = s.obstacles[i];
        const std::string label = "obstacle " + std::to_string(i + 1);
        if (!finite(o.center) || !std::isfinite(o.radius) || !std::isfinite(o.safety_margin)) {
            return label + ": values must be finite";
        }
        if (!(o.radius > 0.0)) return label + ": radius must be > 0";
        if (o.safety_margin < 0.0) return label + ": margin must be >= 0";
        if (distance(o.center, s.start) <= o.effective_radius()) {
            return "start: not strictly outside inflated " + label;
        }
        if (distance(o.center, s.destination) <= o.effective_radius()) {
            return "dest: not strictly outside inflated " + label;
        }
    }
    return std::nullopt;
}

bool clear_of_endpoints(const CircleObstacle& o, const Scenario& s) {
    const double keep = o.effective_radius() + endpoint_clearance;
    return distance(o.center, s.start) > keep && distance(o.center, s.destination) > keep;
}

// ---- canonical obstacle fields ------------------------------------------------
//
// Each case has a fixed anchor layout: seed 1 materializes the anchors verbatim
// (these are the frozen instances committed under scenarios/), other seeds
// jitter the positions for exploratory variants. Radii and counts are part of
// the benchmark protocol and never vary. The fields run diagonally across the
// workspace so the direct route is contested and detours compete.

struct Anchor {
    double x;
    double y;
    double r;
};

// Scattered clutter of mixed-size disks along the diagonal.
constexpr std::array<Anchor, 7> ambient_anchors{{
    {2.1483, 1.2264, 0.9717}, {1.5734, 3.7176, 0.6506}, {4.191, 3.4833, 0.8534},
    {4.7095, 4.8784, 0.7031}, {5.6859, 7.1501, 0.7847}, {7.8341, 5.9695, 1},
    {7.8883, 9.1203, 0.6962},
}};

// Dense forest of equal disks: many narrow corridors, no wide pass.
constexpr std::array<Anchor, 15> constrict_anchors{{
    {2, 1.2, 0.5}, {1.0163, 2.4668, 0.5}, {3.6677, 3.0469, 0.5}, {2.9369, 4.995, 0.5},
    {4.103, 2.3482, 0.5}, {3.685, 4.5605, 0.5}, {5.4957, 4.7854, 0.5}, {4.9932, 6.3452, 0.5},
    {7.0989, 6.3171, 0.5}, {6, 7.6744, 0.5}, {8.0521, 7.231, 0.5}, {7.4, 8.6, 0.5},
    {8.8, 8.2, 0.5}, {4.5905, 1.8121, 0.5}, {8.5003, 6.0399, 0.5},
}};

// Three loose barriers of six disks each, crossing the diagonal in turn.
constexpr std::array<Anchor, 18> tangle_anchors{{
    {1.0098, 1.4403, 0.35}, {1.8088, 2.5711, 0.35}, {2.4055, 1.8598, 0.35}, {2.9393, 1.998, 0.35},
    {3.0592, 2.1786, 0.35}, {3.7689, 3.0496, 0.35}, {7.0633, 3.5015, 0.35}, {7.4464, 3.9614, 0.35},
    {5.6778, 4.4841, 0.35}, {6.6429, 4.0335, 0.35}, {5.8223, 4.6349, 0.35}, {5.8372, 4.0482, 0.35},
    {5.3055, 9.107, 0.35}, {6.5214, 8.2244, 0.35}, {6.2853, 8.455, 0.35}, {7.6674, 8.2814, 0.35},
    {7.4985, 8.8681, 0.35}, {8.9018, 8.2802, 0.35},
}};

// Two barriers of six small disks plus ten scattered larger disks.
constexpr std::array<Anchor, 22> complex_anchors{{
    {1.2792, 1.4206, 0.35}, {1.6652, 1.949, 0.35}, {2.0512, 2.4774, 0.35}, {2.4372, 3.0058, 0.35},
    {2.7986, 3.7937, 0.35}, {2.7827, 4.8113, 0.35}, {4.7984, 7.969, 0.35}, {5.2405, 8.2311, 0.35},
    {5.4063, 8.0452, 0.35}, {6.1247, 8.7554, 0.35}, {6.5667, 9.0176, 0.35}, {7.0088, 9.2797, 0.35},
    {6.6711, 7.1047, 0.5}, {9.2325, 7.1399, 0.5}, {6.3503, 2.7878, 0.5}, {3.5117, 5.263, 0.5},
    {2.4007, 1.0523, 0.5}, {7.7277, 8.2933, 0.5}, {6.8501, 3.5102, 0.5}, {4.8124, 5.1497, 0.5},
    {8.2666, 5.1088, 0.5}, {4.1073, 2.3528, 0.5},
}};

static_assert(ambient_anchors.size() == builtin_layout::ambient_obstacles);
static_assert(constrict_anchors.size() == builtin_layout::constrict_obstacles);
static_assert(tangle_anchors.size() ==
              static_cast<std::size_t>(builtin_layout::tangle_chains * builtin_layout::chain_circles));
static_assert(complex_anchors.size() ==
              static_cast<std::size_t>(builtin_layout::complex_chains * builtin_layout::chain_circles +
                                       builtin_layout::complex_random_obstacles));

template <std::size_t N>
constexpr bool radii_within(const std::array<Anchor, N>& anchors, double lo, double hi) {
    for (const Anchor& a : anchors) {
        if (a.r < lo || a.r > hi) return false;
    }
    return true;
}
static_assert(radii_within(ambient_anchors, builtin_layout::ambient_radius_min,
                           builtin_layout::ambient_radius_max));
static_assert(radii_within(constrict_anchors, builtin_layout::constrict_radius,
                           builtin_layout::constrict_radius));

std::span<const Anchor> anchors_for(ScenarioCase c) {
    switch (c) {
        case ScenarioCase::ambient: return ambient_anchors;
        case ScenarioCase::constrict: return constrict_anchors;
        case ScenarioCase::tangle: return tangle_anchors;
        case ScenarioCase::complex: return complex_anchors;
    }
    throw std::logic_error("unreachable scenario case");
}

/// Materializes one anchor, optionally displaced by a small seeded jitter.
/// Candidates must keep the whole disk inside the workspace and stay clear of
/// the endpoints; after too many rejections the anchor itself is used, which
/// is valid by construction.
CircleObstacle place_anchor(const Anchor& a, bool jitter, Rng& rng, const Scenario& s) {
    CircleObstacle o;
    o.center = {a.x, a.y};
    o.radius = a.r;
    if (!jitter) return o;
    constexpr double sigma = 0.25;
    for (int attempt = 0; attempt < 100; ++attempt) {
        CircleObstacle cand = o;
        cand.center.x = a.x + sigma * rng.normal();
        cand.center.y = a.y + sigma * rng.normal();
        const bool inside = cand.center.x - cand.radius >= s.lower_bound.x &&
                            cand.center.x + cand.radius <= s.upper_bound.x &&
                            cand.center.y - cand.radius >= s.lower_bound.y &&
                            cand.center.y + cand.radius <= s.upper_bound.y;
        if (inside && clear_of_endpoints(cand, s)) return cand;
    }
    return o;
}

std::vector<CircleObstacle> generate_obstacles(ScenarioCase c, Rng& rng, const Scenario& s,
                                               bool jitter) {
    std::vector<CircleObstacle> obs;
    for (const Anchor& a : anchors_for(c)) obs.push_back(place_anchor(a, jitter, rng, s));
    return obs;
}

Scenario base_scenario() {
    Scenario s;
    s.lower_bound = {0.0, 0.0};
    s.upper_bound = {10.0, 10.0};
    s.start = {0.5, 0.5};
    s.destination = {9.5, 9.5};
    s.num_control_points = 3;
    return s;
}

/// splitmix64 finalizer, so per-case streams differ even for equal seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

double need_double(const std::string& name, int line, std::string_view token) {
    double v = 0.0;
    if (!parse_double(token, v)) parse_fail(name, line, "bad number '" + std::string(token) + "'");
    return v;
}

}  // namespace

bool operator==(const Scenario& a, const Scenario& b) {
    return a.name == b.name && a.lower_bound == b.lower_bound && a.upper_bound == b.upper_bound &&
           a.start == b.start && a.destination == b.destination && a.obstacles == b.obstacles &&
           a.num_control_points == b.num_control_points;
}

ScenarioCase parse_case(std::string_view tag) {
    if (tag == "ambient") return ScenarioCase::ambient;
    if (tag == "constrict") return ScenarioCase::constrict;
    if (tag == "tangle") return ScenarioCase::tangle;
    if (tag == "complex") return ScenarioCase::complex;
    throw std::invalid_argument("unknown scenario case '" + std::string(tag) +
                                "' (expected ambient, constrict, tangle or complex)");
}

std::string_view case_name(ScenarioCase c) {
    switch (c) {
        case ScenarioCase::ambient: return "ambient";
        case ScenarioCase::constrict: return "constrict";
        case ScenarioCase::tangle: return "tangle";
        case ScenarioCase::complex: return "complex";
    }
    throw std::logic_error("unreachable scenario case");
}

void validate(const Scenario& s) {
    if (const auto err = invariant_error(s)) {
        throw std::runtime_error(s.name.empty() ? *err : s.name + ": " + *err);
    }
}

std::optional<Trajectory> find_free_trajectory(const Scenario& s) {
    const int n = s.num_control_points;
    Trajectory t;
    t.start = s.start;
    t.destination = s.destination;
    t.control_points.assign(static_cast<std::size_t>(n), Point2{});

    const auto clamp_point = [&](Point2 p) {
        p.x = std::clamp(p.x, s.lower_bound.x, s.upper_bound.x);
        p.y = std::clamp(p.y, s.lower_bound.y, s.upper_bound.y);
        return p;
    };
    const auto free_of_obstacles = [&]() {
        return trajectory_violation(t, s.obstacles) == 0.0;
    };

    // Deterministic family first: control points spread along the straight
    // line, each shifted sideways by one of a small set of offsets.
    const double dx = s.destination.x - s.start.x;
    const double dy = s.destination.y - s.start.y;
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len > 0.0) {
        const double nx = -dy / len;
        const double ny = dx / len;
        std::vector<double> offsets{0.0};
        for (double o = 0.5; o <= 4.0; o += 0.5) {
            offsets.push_back(o);
            offsets.push_back(-o);
        }
        double combos = 1.0;
        for (int i = 0; i < n; ++i) combos *= static_cast<double>(offsets.size());
        if (combos <= 100000.0) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
            while (true) {
                for (int i = 0; i < n; ++i) {
                    const double frac = static_cast<double>(i + 1) / (n + 1);
                    const double off = offsets[idx[static_cast<std::size_t>(i)]];
                    t.control_points[static_cast<std::size_t>(i)] = clamp_point(
                        {s.start.x + frac * dx + off * nx, s.start.y + frac * dy + off * ny});
                }
                if (free_of_obstacles()) return t;
                int carry = 0;
                while (carry < n) {
                    if (++idx[static_cast<std::size_t>(carry)] < offsets.size()) break;
                    idx[static_cast<std::size_t>(carry)] = 0;
                    ++carry;
                }
                if (carry == n) break;
            }
        }
    }

    // Random backstop with a fixed internal seed: still a pure function of s.
    Rng rng(0x5eedf00dULL);
    for (int i = 0; i < 5000; ++i) {
        for (int k = 0; k < n; ++k) {
            t.control_points[static_cast<std::size_t>(k)] = {
                rng.uniform(s.lower_bound.x, s.upper_bound.x),
                rng.uniform(s.lower_bound.y, s.upper_bound.y)};
        }
        if (free_of_obstacles()) return t;
    }
    return std::nullopt;
}

Scenario builtin_scenario(ScenarioCase c, std::uint64_t seed) {
    Scenario s = base_scenario();
    // Seed 1 is the canonical instance shipped in scenarios/ and keeps the bare
    // case name; exploratory seeds are suffixed so reports tell them apart.
    s.name = std::string(case_name(c)) + (seed == 1 ? "" : "-" + std::to_string(seed));
    const bool jitter = seed != 1;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    for (int attempt = 0; attempt < 64; ++attempt) {
        s.obstacles = generate_obstacles(c, rng, s, jitter);
        if (invariant_error(s)) continue;  // a jittered disk crowded an endpoint; redraw
        if (find_free_trajectory(s)) return s;
    }
    throw std::runtime_error("scenario generator: no feasible layout for case '" +
                             std::string(case_name(c)) + "', seed " + std::to_string(seed));
}

Scenario read_scenario(std::istream& in, const std::string& display_name) {
    Scenario s;
    std::string file_name;
    std::string line;
    int line_no = 0;
    int stage = 0;  // 0 bounds, 1 start, 2 dest, 3 control_points, 4+ obstacles
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (!view.empty() && view.front() == '#') {
            std::string_view rest = trim(view.substr(1));
            if (rest.substr(0, 5) == "name:") file_name = std::string(trim(rest.substr(5)));
            continue;
        }
        if (const std::size_t hash = view.find('#'); hash != std::string_view::npos) {
            view = trim(view.substr(0, hash));
        }
        if (view.empty()) continue;

        const auto tokens = tokenize(view);
        const std::string_view keyword = tokens.front();
        const auto expect = [&](std::string_view kw, std::size_t values) {
            if (keyword != kw) {
                parse_fail(display_name, line_no,
                           "expected '" + std::string(kw) + "', got '" + std::string(keyword) + "'");
            }
            if (tokens.size() != values + 1) {
                parse_fail(display_name, line_no,
                           "'" + std::string(kw) + "' needs " + std::to_string(values) + " values");
            }
        };
        switch (stage) {
            case 0:
                expect("bounds", 4);
                s.lower_bound = {need_double(display_name, line_no, tokens[1]),
                                 need_double(display_name, line_no, tokens[2])};
                s.upper_bound = {need_double(display_name, line_no, tokens[3]),
                                 need_double(display_name, line_no, tokens[4])};
                break;
            case 1:
                expect("start", 2);
                s.start = {need_double(display_name, line_no, tokens[1]),
                           need_double(display_name, line_no, tokens[2])};
                break;
            case 2:
                expect("dest", 2);
                s.destination = {need_double(display_name, line_no, tokens[1]),
                                 need_double(display_name, line_no, tokens[2])};
                break;
            case 3:
                expect("control_points", 1);
                if (!parse_int(tokens[1], s.num_control_points)) {
                    parse_fail(display_name, line_no, "bad integer '" + std::string(tokens[1]) + "'");
                }
                break;
            default: {
                if (keyword != "obstacle") {
                    parse_fail(display_name, line_no,
                               "expected 'obstacle', got '" + std::string(keyword) + "'");
                }
                if (tokens.size() != 4 && tokens.size() != 5) {
                    parse_fail(display_name, line_no, "'obstacle' needs 3 or 4 values");
                }
                CircleObstacle o;
                o.center = {need_double(display_name, line_no, tokens[1]),
                            need_double(display_name, line_no, tokens[2])};
                o.radius = need_double(display_name, line_no, tokens[3]);
                if (tokens.size() == 5) o.safety_margin = need_double(display_name, line_no, tokens[4]);
                s.obstacles.push_back(o);
                break;
            }
        }
        ++stage;
    }
    if (stage < 4) {
        parse_fail(display_name, line_no,
                   "unexpected end of file (need bounds, start, dest, control_points)");
    }
    s.name = file_name.empty() ? display_name : file_name;
    validate(s);
    return s;
}

void write_scenario(const Scenario& s, std::ostream& out) {
    out << "# name: " << s.name << "\n";
    out << "bounds " << format_double(s.lower_bound.x) << ' ' << format_double(s.lower_bound.y)
        << ' ' << format_double(s.upper_bound.x) << ' ' << format_double(s.upper_bound.y) << "\n";
    out << "start " << format_double(s.start.x) << ' ' << format_double(s.start.y) << "\n";
    out << "dest " << format_double(s.destination.x) << ' ' << format_double(s.destination.y)
        << "\n";
    out << "control_points " << s.num_control_points << "\n";
    for (const CircleObstacle& o : s.obstacles) {
        out << "obstacle " << format_double(o.center.x) << ' ' << format_double(o.center.y) << ' '
            << format_double(o.radius);
        if (o.safety_margin != 0.0) out << ' ' << format_double(o.safety_margin);
        out << "\n";
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
    return read_scenario(in, path.stem().string());
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file '" + path.string() + "'");
    write_scenario(s, out);
    if (!out) throw std::runtime_error("failed writing scenario file '" + path.string() + "'");
}

}  // namespace uavtraj
