#pragma once

#include <vector>

namespace uavtraj {

/// Diversity trace of one run with the derived exploration/exploitation split.
struct DiversitySeries {
    std::vector<double> diversity;        // the input series, copied through
    double max_diversity = 0.0;           // run-wide maximum used for normalization
    std::vector<double> exploration_pct;  // 100 * D / D_max
    std::vector<double> exploitation_pct; // 100 * (D_max - D) / D_max
};

/// Population diversity: per-dimension mean absolute deviation from the
/// per-dimension median, averaged over dimensions. Zero iff all agents sit on
/// the same point. Throws std::invalid_argument on an empty or ragged matrix.
double population_diversity(const std::vector<std::vector<double>>& positions);

/// Normalizes a per-iteration diversity series by its run-wide maximum. The
/// two percentage series sum to 100 at every iteration; an all-zero series
/// degenerates to exploration 0 / exploitation 100 throughout.
DiversitySeries exploration_exploitation(const std::vector<double>& series);

}  // namespace uavtraj
