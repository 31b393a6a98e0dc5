#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "uavtraj/optimizer.hpp"
#include "uavtraj/rng.hpp"

namespace uavtraj {

enum class Algorithm { hgo, pso, gwo, csa, bmo };

Algorithm parse_algorithm(std::string_view tag);  // throws on an unknown tag
std::string_view algorithm_name(Algorithm a);

/// Shared configuration for the four reference optimizers. `params` carries
/// named overrides; anything absent falls back to the canonical default.
struct BaselineConfig {
    Algorithm algorithm = Algorithm::pso;
    int population = 100;
    int iterations = 100;
    std::uint64_t seed = 1;
    std::map<std::string, double> params;
};

/// Canonical parameter defaults per algorithm (empty for hgo, which has its
/// own config type).
std::map<std::string, double> default_params(Algorithm a);

/// Defaults merged with the config's overrides; unknown override keys throw.
std::map<std::string, double> resolved_params(const BaselineConfig& cfg);

/// Throws std::invalid_argument for nonsensical population/iteration counts
/// or unknown parameter overrides.
void validate(const BaselineConfig& cfg);

RunResult run_pso(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective);
RunResult run_gwo(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective);
RunResult run_csa(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective);
RunResult run_bmo(const BaselineConfig& cfg, const SearchSpace& space, const Objective& objective);

/// Dispatches on cfg.algorithm; throws for Algorithm::hgo.
RunResult run_baseline(const BaselineConfig& cfg, const SearchSpace& space,
                       const Objective& objective);

/// Raw Mantegna heavy-tailed step used by the cuckoo search; exposed for the
/// distribution sanity tests.
double levy_step(double exponent, Rng& rng);

}  // namespace uavtraj
