#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavtraj/hgo.hpp"
#include "uavtraj/objective.hpp"
#include "uavtraj/scenario.hpp"

using namespace uavtraj;

namespace {

Scenario open_field(int control_points) {
    Scenario s;
    s.name = "open";
    s.lower_bound = {0, 0};
    s.upper_bound = {10, 10};
    s.start = {0.5, 0.5};
    s.destination = {9.5, 9.5};
    s.num_control_points = control_points;
    return s;
}

constexpr double kStraightLine = 12.727922061357855;  // |(0.5,0.5) -> (9.5,9.5)|

}  // namespace

TEST_SUITE("hgo") {

TEST_CASE("config validation names the offending field") {
    hgo::HgoConfig cfg;
    cfg.population = 0;
    try {
        hgo::validate(cfg);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("population") != std::string::npos);
    }

    cfg = {};
    cfg.clusters = 0;
    CHECK_THROWS_AS(hgo::validate(cfg), std::invalid_argument);

    cfg = {};
    cfg.worst_fraction_lo = 0.3;
    cfg.worst_fraction_hi = 0.2;
    CHECK_THROWS_AS(hgo::validate(cfg), std::invalid_argument);

    cfg = {};
    CHECK_NOTHROW(hgo::validate(cfg));
}

TEST_CASE("initialize partitions agents into contiguous near-equal clusters") {
    hgo::HgoConfig cfg;
    cfg.population = 23;
    cfg.clusters = 5;
    SearchSpace space{{0, 0}, {10, 10}};
    Rng rng(5);
    const hgo::Swarm swarm = hgo::initialize(cfg, space, rng);
    REQUIRE(swarm.agents.size() == 23);
    REQUIRE(swarm.clusters.size() == 5);
    std::size_t members = 0;
    for (const auto& cluster : swarm.clusters) {
        CHECK(cluster.members.size() >= 4);
        CHECK(cluster.members.size() <= 5);
        CHECK(cluster.henry > 0.0);
        CHECK(cluster.decay > 0.0);
        members += cluster.members.size();
    }
    CHECK(members == swarm.agents.size());
    for (const auto& agent : swarm.agents) {
        for (double x : agent.position) {
            CHECK(x >= 0.0);
            CHECK(x <= 10.0);
        }
        for (double p : agent.pressure) {
            CHECK(p >= 0.0);
            CHECK(p < cfg.pressure_init_scale);
        }
    }
}

TEST_CASE("henry decay matches the frozen scalar oracle") {
    // H=0.5, C=1, t=0 of 100, reference 298.15 evaluated independently.
    CHECK(hgo::update_henry(0.5, 1.0, 0, 100, 298.15) ==
          doctest::Approx(0.1845576931973844).epsilon(1e-14));
}

TEST_CASE("henry decay is strictly contractive for positive decay rates") {
    for (double h : {0.1, 0.5, 0.9}) {
        for (int t : {0, 1, 50, 100}) {
            CHECK(hgo::update_henry(h, 0.7, t, 100, 298.15) < h);
        }
    }
}

TEST_CASE("solubility is the plain product of its factors") {
    CHECK(hgo::solubility(1.0, 0.0, 1.0) == 0.0);
    CHECK(hgo::solubility(0.5, 3.0, 1.0) == doctest::Approx(1.5));
    CHECK(hgo::solubility(3.0, 0.5, 1.0) == doctest::Approx(1.5));  // commutative factors
    CHECK(hgo::solubility(0.5, 3.0, 2.0) == doctest::Approx(3.0));  // doubling the constant doubles it
}

TEST_CASE("worst_count spans the configured fraction band") {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
        const int n100 = hgo::worst_count(100, 0.1, 0.2, rng);
        CHECK(n100 >= 10);
        CHECK(n100 <= 20);
        const int n10 = hgo::worst_count(10, 0.1, 0.2, rng);
        CHECK(n10 >= 1);
        CHECK(n10 <= 2);
    }
}

TEST_CASE("degenerate fraction interval is exact") {
    // The operation accepts lo == hi even though run configs require lo < hi.
    Rng rng(9);
    CHECK(hgo::worst_count(100, 0.1, 0.1, rng) == 10);
}

TEST_CASE("agent sitting on both attractors with unit solubility does not move") {
    hgo::HgoConfig cfg;
    SearchSpace space{{0, 0, 0}, {10, 10, 10}};
    hgo::Agent agent;
    agent.position = {4.0, 5.0, 6.0};
    agent.solubility = {1.0, 1.0, 1.0};
    agent.fitness = 2.0;
    hgo::Cluster cluster;
    cluster.best_position = agent.position;
    const std::vector<double> anchor = agent.position;
    Rng rng(1);
    hgo::update_position(agent, cluster, anchor, 2.0, cfg, space, rng);
    CHECK(agent.position == std::vector<double>{4.0, 5.0, 6.0});
}

TEST_CASE("position updates stay inside the box") {
    hgo::HgoConfig cfg;
    SearchSpace space{{0, 0}, {10, 10}};
    Rng rng(2);
    hgo::Agent agent;
    agent.position = {9.9, 0.1};
    agent.solubility = {8.0, 8.0};  // large solubility pushes the target far outside
    agent.fitness = 30.0;
    hgo::Cluster cluster;
    cluster.best_position = {0.2, 9.8};
    for (int i = 0; i < 200; ++i) {
        hgo::update_position(agent, cluster, cluster.best_position, 1.0, cfg, space, rng);
        CHECK(agent.position[0] >= 0.0);
        CHECK(agent.position[0] <= 10.0);
        CHECK(agent.position[1] >= 0.0);
        CHECK(agent.position[1] <= 10.0);
    }
}

TEST_CASE("respawn replaces exactly the worst agents") {
    SearchSpace space{{0, 0}, {10, 10}};
    std::vector<hgo::Agent> agents(5);
    for (std::size_t i = 0; i < agents.size(); ++i) {
        agents[i].position = {static_cast<double>(i), static_cast<double>(i)};
        agents[i].fitness = static_cast<double>(i);  // agents 3 and 4 are worst
    }
    const Objective objective = [](std::span<const double> v) { return v[0] + v[1] + 100.0; };
    Rng rng(7);
    hgo::respawn_worst(agents, 2, space, objective, rng);
    CHECK(agents[0].position == std::vector<double>{0.0, 0.0});
    CHECK(agents[1].position == std::vector<double>{1.0, 1.0});
    CHECK(agents[2].position == std::vector<double>{2.0, 2.0});
    CHECK(agents[3].position != std::vector<double>{3.0, 3.0});
    CHECK(agents[4].position != std::vector<double>{4.0, 4.0});
    CHECK(agents[3].fitness == doctest::Approx(agents[3].position[0] + agents[3].position[1] + 100.0));
}

TEST_CASE("respawn with zero count is a no-op") {
    SearchSpace space{{0, 0}, {10, 10}};
    std::vector<hgo::Agent> agents(3);
    for (auto& a : agents) a.position = {5.0, 5.0};
    const Objective objective = [](std::span<const double>) { return 1.0; };
    Rng rng(7);
    hgo::respawn_worst(agents, 0, space, objective, rng);
    for (const auto& a : agents) CHECK(a.position == std::vector<double>{5.0, 5.0});
}

TEST_CASE("open-field run lands within two percent of the straight line") {
    const Scenario s = open_field(1);
    const SearchSpace space = search_space(s);
    const Objective objective = make_objective(s);
    std::vector<double> finals;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        hgo::HgoConfig cfg;
        cfg.seed = seed;
        finals.push_back(hgo::run(cfg, space, objective).best_cost);
    }
    std::sort(finals.begin(), finals.end());
    const double median = 0.5 * (finals[4] + finals[5]);
    CHECK(median <= kStraightLine * 1.02);
    CHECK(median >= kStraightLine - 1e-9);
}

TEST_CASE("run history is nonincreasing and consistent with the result") {
    const Scenario s = open_field(3);
    hgo::HgoConfig cfg;
    cfg.population = 30;
    cfg.iterations = 40;
    cfg.seed = 4;
    const RunResult r = hgo::run(cfg, search_space(s), make_objective(s));
    REQUIRE(r.history.size() == 40);
    for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] <= r.history[i - 1]);
    CHECK(r.best_cost == r.history.back());
    CHECK(r.diversity.size() == r.history.size());
    CHECK(r.evaluations > 0);
    CHECK(make_objective(s)(r.best_vector) == doctest::Approx(r.best_cost).epsilon(1e-12));
}

TEST_CASE("identical seeds give bit-identical runs") {
    const Scenario s = open_field(3);
    hgo::HgoConfig cfg;
    cfg.population = 25;
    cfg.iterations = 30;
    cfg.seed = 12;
    const RunResult a = hgo::run(cfg, search_space(s), make_objective(s));
    const RunResult b = hgo::run(cfg, search_space(s), make_objective(s));
    CHECK(a.history == b.history);
    CHECK(a.best_vector == b.best_vector);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.diversity == b.diversity);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("trace exposes the run mechanics invariants") {
    const Scenario s = open_field(3);
    hgo::HgoConfig cfg;
    cfg.population = 60;
    cfg.iterations = 50;
    cfg.seed = 3;
    hgo::Trace trace;
    hgo::run(cfg, search_space(s), make_objective(s), &trace);
    REQUIRE(trace.henry.size() == 50);
    REQUIRE(trace.respawned.size() == 50);
    REQUIRE(trace.max_bound_excess.size() == 50);
    // Henry constants strictly decrease per cluster, iteration over iteration.
    for (std::size_t t = 1; t < trace.henry.size(); ++t) {
        REQUIRE(trace.henry[t].size() == trace.henry[t - 1].size());
        for (std::size_t q = 0; q < trace.henry[t].size(); ++q) {
            CHECK(trace.henry[t][q] < trace.henry[t - 1][q]);
        }
    }
    for (const int n : trace.respawned) {
        CHECK(n >= 6);   // floor(0.1 * 60)
        CHECK(n <= 12);  // ceil(0.2 * 60)
    }
    for (const double excess : trace.max_bound_excess) CHECK(excess == 0.0);
}

TEST_CASE("single agent single cluster degenerate run works") {
    const Scenario s = open_field(1);
    hgo::HgoConfig cfg;
    cfg.population = 1;
    cfg.clusters = 1;
    cfg.iterations = 5;
    cfg.seed = 2;
    const RunResult r = hgo::run(cfg, search_space(s), make_objective(s));
    CHECK(r.history.size() == 5);
    CHECK(std::isfinite(r.best_cost));
}

}  // TEST_SUITE
