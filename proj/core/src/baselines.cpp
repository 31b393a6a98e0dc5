#include "uavtraj/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace uavtraj {

Algorithm parse_algorithm(std::string_view tag) {
    if (tag == "hgo") return Algorithm::hgo;
    if (tag == "pso") return Algorithm::pso;
    if (tag == "gwo") return Algorithm::gwo;
    if (tag == "csa") return Algorithm::csa;
    if (tag == "bmo") return Algorithm::bmo;
    throw std::invalid_argument("unknown algorithm '" + std::string(tag) +
                             "' (expected hgo, pso, gwo, csa or bmo)");
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::hgo: return "hgo";
        case Algorithm::pso: return "pso";
        case Algorithm::gwo: return "gwo";
        case Algorithm::csa: return "csa";
        case Algorithm::bmo: return "bmo";
    }
    throw std::logic_error("unreachable algorithm tag");
}

std::map<std::string, double> default_params(Algorithm a) {
    switch (a) {
        case Algorithm::pso:
            return {{"inertia", 0.729}, {"cognitive", 1.49445}, {"social", 1.49445}};
        case Algorithm::gwo:
            return {};  // only the fixed linear 2 -> 0 control schedule
        case Algorithm::csa:
            return {{"discovery", 0.25}, {"levy_exponent", 1.5}, {"step_scale", 0.01}};
        case Algorithm::bmo:
            return {{"mating_range", 7.0}};
        case Algorithm::hgo:
            return {};
    }
    throw std::logic_error("unreachable algorithm tag");
}

std::map<std::string, double> resolved_params(const BaselineConfig& cfg) {
    std::map<std::string, double> params = default_params(cfg.algorithm);
    for (const auto& [key, value] : cfg.params) {
        if (params.find(key) == params.end()) {
            throw std::invalid_argument("unknown parameter '" + key + "' for algorithm '" +
                                        std::string(algorithm_name(cfg.algorithm)) + "'");
        }
        params[key] = value;
    }
    return params;
}

void validate(const BaselineConfig& cfg) {
    if (cfg.population < 2) throw std::invalid_argument("BaselineConfig: population must be >= 2");
    if (cfg.iterations < 1) throw std::invalid_argument("BaselineConfig: iterations must be >= 1");
    resolved_params(cfg);  // rejects unknown override keys early
}

double levy_step(double exponent, Rng& rng) {
    // Mantegna's algorithm: u / |v|^(1/beta) with u ~ N(0, sigma_u^2), v ~ N(0, 1).
    constexpr double pi = 3.14159265358979323846;
    const double beta = exponent;
    const double sigma_u = std::pow(
        std::tgamma(1.0 + beta) * std::sin(pi * beta / 2.0) /
            (std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0)),
        1.0 / beta);
    const double u = rng.normal() * sigma_u;
    double v = rng.normal();
    while (v == 0.0) v = rng.normal();
    return u / std::pow(std::abs(v), 1.0 / beta);
}

RunResult run_baseline(const BaselineConfig& cfg, const SearchSpace& space,
                       const Objective& objective) {
    switch (cfg.algorithm) {
        case Algorithm::pso: return run_pso(cfg, space, objective);
        case Algorithm::gwo: return run_gwo(cfg, space, objective);
        case Algorithm::csa: return run_csa(cfg, space, objective);
        case Algorithm::bmo: return run_bmo(cfg, space, objective);
        case Algorithm::hgo:
            throw std::invalid_argument("run_baseline: hgo has its own config; use hgo::run");
    }
    throw std::logic_error("unreachable algorithm tag");
}

}  // namespace uavtraj
