#include "uavtraj/hgo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "run_recorder.hpp"

namespace uavtraj::hgo {

namespace {

/// Picks each cluster's minimal-fitness member (ties to the lower index) and,
/// when it improves on the cluster's best-so-far, snapshots its position.
/// The snapshot is elitist so the cluster attractor never regresses when its
/// best member wanders off or is respawned.
void refresh_cluster_bests(Swarm& swarm) {
    for (Cluster& cluster : swarm.clusters) {
        int best = -1;
        for (const int p : cluster.members) {
            if (best < 0 || swarm.agents[static_cast<std::size_t>(p)].fitness <
                                swarm.agents[static_cast<std::size_t>(best)].fitness) {
                best = p;
            }
        }
        cluster.best = best;
        if (best >= 0) {
            const Agent& candidate = swarm.agents[static_cast<std::size_t>(best)];
            if (candidate.fitness < cluster.best_fitness) {
                cluster.best_fitness = candidate.fitness;
                cluster.best_position = candidate.position;
            }
        }
    }
}

double max_bound_excess(const std::vector<Agent>& agents, const SearchSpace& space) {
    double excess = 0.0;
    for (const Agent& a : agents) {
        for (std::size_t d = 0; d < a.position.size(); ++d) {
            excess = std::max(excess, space.lower[d] - a.position[d]);
            excess = std::max(excess, a.position[d] - space.upper[d]);
        }
    }
    return std::max(excess, 0.0);
}

}  // namespace

void validate(const HgoConfig& cfg) {
    const auto fail = [](const std::string& what) { throw std::invalid_argument("HgoConfig: " + what); };
    if (cfg.clusters < 1) fail("clusters must be >= 1");
    if (cfg.population < cfg.clusters) fail("population must be >= clusters");
    if (cfg.iterations < 1) fail("iterations must be >= 1");
    if (!(cfg.henry_init_scale > 0.0)) fail("henry_init_scale must be > 0");
    if (!(cfg.pressure_init_scale > 0.0)) fail("pressure_init_scale must be > 0");
    if (!(cfg.decay_init_scale > 0.0)) fail("decay_init_scale must be > 0");
    if (!(cfg.reference_temperature > 0.0)) fail("reference_temperature must be > 0");
    if (!(cfg.fitness_epsilon > 0.0)) fail("fitness_epsilon must be > 0");
    if (!(cfg.influence_weight > 0.0)) fail("influence_weight must be > 0");
    if (!(cfg.interaction_scale > 0.0)) fail("interaction_scale must be > 0");
    if (!(cfg.solubility_scale > 0.0)) fail("solubility_scale must be > 0");
    if (!(cfg.worst_fraction_lo >= 0.0 && cfg.worst_fraction_lo < cfg.worst_fraction_hi &&
          cfg.worst_fraction_hi <= 1.0)) {
        fail("worst fractions must satisfy 0 <= lo < hi <= 1");
    }
}

Swarm initialize(const HgoConfig& cfg, const SearchSpace& space, Rng& rng) {
    Swarm swarm;
    const std::size_t dim = space.lower.size();
    swarm.agents.resize(static_cast<std::size_t>(cfg.population));
    for (int p = 0; p < cfg.population; ++p) {
        Agent& agent = swarm.agents[static_cast<std::size_t>(p)];
        agent.position = uniform_point(space, rng);
        agent.pressure.resize(dim);
        for (double& pressure : agent.pressure) {
            pressure = cfg.pressure_init_scale * rng.uniform_pos();
        }
        agent.solubility.assign(dim, 0.0);
        // contiguous near-equal blocks: sizes differ by at most one
        agent.cluster = static_cast<int>((static_cast<long long>(p) * cfg.clusters) / cfg.population);
    }
    swarm.clusters.resize(static_cast<std::size_t>(cfg.clusters));
    for (Cluster& cluster : swarm.clusters) {
        cluster.henry = cfg.henry_init_scale * rng.uniform_pos();
        cluster.decay = cfg.decay_init_scale * rng.uniform_pos();
    }
    for (int p = 0; p < cfg.population; ++p) {
        const int q = swarm.agents[static_cast<std::size_t>(p)].cluster;
        swarm.clusters[static_cast<std::size_t>(q)].members.push_back(p);
    }
    for (Agent& agent : swarm.agents) {
        const Cluster& cluster = swarm.clusters[static_cast<std::size_t>(agent.cluster)];
        for (std::size_t d = 0; d < dim; ++d) {
            agent.solubility[d] = solubility(cluster.henry, agent.pressure[d], cfg.solubility_scale);
        }
    }
    return swarm;
}

double update_henry(double henry, double decay, int iteration, int max_iterations,
                    double reference_temperature) {
    const double temperature =
        std::exp(-static_cast<double>(iteration) / static_cast<double>(max_iterations));
    return henry * std::exp(-decay * (1.0 / temperature - 1.0 / reference_temperature));
}

double solubility(double henry, double pressure, double scale) {
    return scale * henry * pressure;
}

int worst_count(int population, double lo, double hi, Rng& rng) {
    const double fraction = rng.uniform() * (hi - lo) + lo;
    return static_cast<int>(std::lround(population * fraction));
}

void update_position(Agent& agent, const Cluster& cluster, std::span<const double> best_vector,
                     double best_cost, const HgoConfig& cfg, const SearchSpace& space, Rng& rng) {
    const double direction = rng.sign();  // one shared flip per agent per iteration
    const double alpha = cfg.interaction_scale *
                         std::exp(-(best_cost + cfg.fitness_epsilon) /
                                  (agent.fitness + cfg.fitness_epsilon));
    const double cluster_rand = rng.uniform();  // one draw per term per agent, as in the update equation
    const double swarm_rand = rng.uniform();
    for (std::size_t d = 0; d < agent.position.size(); ++d) {
        const double toward_cluster =
            cluster_rand * alpha * (cluster.best_position[d] - agent.position[d]);
        const double toward_swarm =
            swarm_rand * cfg.influence_weight *
            (agent.solubility[d] * best_vector[d] - agent.position[d]);
        const double moved = agent.position[d] + direction * (toward_cluster + toward_swarm);
        agent.position[d] = std::clamp(moved, space.lower[d], space.upper[d]);
    }
}

void respawn_worst(std::vector<Agent>& agents, int count, const SearchSpace& space,
                   const Objective& objective, Rng& rng) {
    if (count <= 0) return;
    count = std::min(count, static_cast<int>(agents.size()));
    std::vector<int> order(agents.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double fa = agents[static_cast<std::size_t>(a)].fitness;
        const double fb = agents[static_cast<std::size_t>(b)].fitness;
        if (fa != fb) return fa > fb;  // worst first
        return a < b;                  // deterministic tie-break
    });
    for (int i = 0; i < count; ++i) {
        Agent& agent = agents[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (std::size_t d = 0; d < agent.position.size(); ++d) {
            agent.position[d] = space.lower[d] + rng.uniform() * (space.upper[d] - space.lower[d]);
        }
        agent.fitness = objective(agent.position);
    }
}

RunResult run(const HgoConfig& cfg, const SearchSpace& space, const Objective& objective,
              Trace* trace) {
    validate(cfg);
    if (space.dim() < 1 || space.lower.size() != space.upper.size()) {
        throw std::invalid_argument("hgo::run: search space must have matching nonempty bounds");
    }

    detail::RunRecorder recorder;
    const Objective counted = [&](std::span<const double> v) {
        return recorder.evaluate(objective, v);
    };

    Rng rng(cfg.seed);
    Swarm swarm = initialize(cfg, space, rng);
    for (Agent& agent : swarm.agents) {
        agent.fitness = counted(agent.position);
    }
    refresh_cluster_bests(swarm);

    std::vector<std::vector<double>> snapshot;
    snapshot.reserve(swarm.agents.size());

    for (int t = 1; t <= cfg.iterations; ++t) {
        // Anchors from the previous iteration, so updates within an iteration
        // are order-independent.
        const double anchor_cost = recorder.best_cost();
        const std::vector<double> anchor_vector = recorder.best_vector();

        for (Agent& agent : swarm.agents) {
            update_position(agent, swarm.clusters[static_cast<std::size_t>(agent.cluster)],
                            anchor_vector, anchor_cost, cfg, space, rng);
            agent.fitness = counted(agent.position);
        }
        for (Cluster& cluster : swarm.clusters) {
            cluster.henry =
                update_henry(cluster.henry, cluster.decay, t, cfg.iterations, cfg.reference_temperature);
        }
        for (Agent& agent : swarm.agents) {
            const Cluster& cluster = swarm.clusters[static_cast<std::size_t>(agent.cluster)];
            for (std::size_t d = 0; d < agent.solubility.size(); ++d) {
                agent.solubility[d] =
                    solubility(cluster.henry, agent.pressure[d], cfg.solubility_scale);
            }
        }
        const int respawn =
            worst_count(cfg.population, cfg.worst_fraction_lo, cfg.worst_fraction_hi, rng);
        respawn_worst(swarm.agents, respawn, space, counted, rng);
        refresh_cluster_bests(swarm);

        snapshot.clear();
        for (const Agent& agent : swarm.agents) snapshot.push_back(agent.position);
        recorder.close_iteration(snapshot);

        if (trace != nullptr) {
            std::vector<double> henry_row;
            henry_row.reserve(swarm.clusters.size());
            for (const Cluster& cluster : swarm.clusters) henry_row.push_back(cluster.henry);
            trace->henry.push_back(std::move(henry_row));
            trace->respawned.push_back(respawn);
            trace->max_bound_excess.push_back(max_bound_excess(swarm.agents, space));
        }
    }
    return recorder.take();
}

}  // namespace uavtraj::hgo
