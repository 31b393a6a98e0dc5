#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "uavtraj/optimizer.hpp"
#include "uavtraj/rng.hpp"

namespace uavtraj::hgo {

/// Tuning constants for the gas-solubility optimizer. The defaults follow the
/// published formulation; they are deliberately not auto-tuned.
struct HgoConfig {
    int population = 100;
    int iterations = 100;
    int clusters = 5;                      // gas types, each with its own solubility constants
    double henry_init_scale = 1.0;         // per-cluster Henry constant ~ scale * U(0,1)
    double pressure_init_scale = 10.0;     // per-agent partial pressure ~ scale * U(0,1)
    double decay_init_scale = 1.0;         // per-cluster decay rate ~ scale * U(0,1)
    double reference_temperature = 298.15; // Henry-law reference in the decay exponent
    double fitness_epsilon = 0.05;         // regularizer in the interaction ratio
    double influence_weight = 1.0;         // weight of the swarm-best attraction term
    double interaction_scale = 1.0;        // scale of the cluster-best attraction term
    double solubility_scale = 1.0;         // multiplier in the solubility product
    double worst_fraction_lo = 0.1;        // respawn at least this fraction each iteration
    double worst_fraction_hi = 0.2;        // ... and at most this fraction
    std::uint64_t seed = 1;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const HgoConfig& cfg);

struct Agent {
    std::vector<double> position;
    std::vector<double> pressure;    // per-dimension, fixed at initialization
    std::vector<double> solubility;  // per-dimension, refreshed every iteration
    double fitness = 0.0;
    int cluster = 0;
};

struct Cluster {
    double henry = 0.0;  // current Henry constant; decays monotonically
    double decay = 0.0;  // positive decay rate
    int best = -1;       // index (into the swarm) of the member with minimal fitness
    double best_fitness = std::numeric_limits<double>::infinity();  // best fitness the cluster has seen
    std::vector<double> best_position;  // position achieving best_fitness (elitist memory)
    std::vector<int> members;
};

struct Swarm {
    std::vector<Agent> agents;
    std::vector<Cluster> clusters;
};

/// Draws positions, pressures and per-cluster constants; partitions agents
/// into near-equal contiguous clusters. Fitness is left for the caller to fill.
Swarm initialize(const HgoConfig& cfg, const SearchSpace& space, Rng& rng);

/// One decay step of the Henry constant under the exponential cooling
/// schedule; `iteration` counts 1-based within a run of `max_iterations`.
double update_henry(double henry, double decay, int iteration, int max_iterations,
                    double reference_temperature);

/// Solubility of one agent dimension given the decayed Henry constant.
double solubility(double henry, double pressure, double scale);

/// How many agents to respawn this iteration: round(population * U(lo, hi)).
int worst_count(int population, double lo, double hi, Rng& rng);

/// Moves one agent toward its cluster best and the (solubility-weighted)
/// swarm best, with a random shared sign flip, then clamps to the box.
void update_position(Agent& agent, const Cluster& cluster, std::span<const double> best_vector,
                     double best_cost, const HgoConfig& cfg, const SearchSpace& space, Rng& rng);

/// Re-draws the `count` currently-worst agents uniformly and re-evaluates them.
void respawn_worst(std::vector<Agent>& agents, int count, const SearchSpace& space,
                   const Objective& objective, Rng& rng);

/// Per-iteration internals recorded when a trace sink is passed to run().
struct Trace {
    std::vector<std::vector<double>> henry;  // [iteration][cluster]
    std::vector<int> respawned;              // worst-respawn count per iteration
    std::vector<double> max_bound_excess;    // largest out-of-box excess; 0 when clean
};

RunResult run(const HgoConfig& cfg, const SearchSpace& space, const Objective& objective,
              Trace* trace = nullptr);

}  // namespace uavtraj::hgo
