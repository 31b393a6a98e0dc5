#include "uavtraj/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavtraj {

double population_diversity(const std::vector<std::vector<double>>& positions) {
    if (positions.empty() || positions.front().empty()) {
        throw std::invalid_argument("population_diversity: empty population");
    }
    const std::size_t n = positions.size();
    const std::size_t dim = positions.front().size();
    for (const auto& row : positions) {
        if (row.size() != dim) {
            throw std::invalid_argument("population_diversity: ragged position matrix");
        }
    }
    std::vector<double> column(n);
    double total = 0.0;
    for (std::size_t q = 0; q < dim; ++q) {
        for (std::size_t p = 0; p < n; ++p) column[p] = positions[p][q];
        std::sort(column.begin(), column.end());
        const double median =
            (n % 2 == 1) ? column[n / 2] : 0.5 * (column[n / 2 - 1] + column[n / 2]);
        double deviation = 0.0;
        for (std::size_t p = 0; p < n; ++p) deviation += std::abs(median - positions[p][q]);
        total += deviation / static_cast<double>(n);
    }
    return total / static_cast<double>(dim);
}

DiversitySeries exploration_exploitation(const std::vector<double>& series) {
    if (series.empty()) {
        throw std::invalid_argument("exploration_exploitation: empty diversity series");
    }
    DiversitySeries out;
    out.diversity = series;
    out.max_diversity = *std::max_element(series.begin(), series.end());
    out.exploration_pct.reserve(series.size());
    out.exploitation_pct.reserve(series.size());
    if (out.max_diversity <= 0.0) {
        // A population that never spreads out: all exploitation by convention.
        out.exploration_pct.assign(series.size(), 0.0);
        out.exploitation_pct.assign(series.size(), 100.0);
        return out;
    }
    for (const double d : series) {
        out.exploration_pct.push_back(100.0 * d / out.max_diversity);
        out.exploitation_pct.push_back(100.0 * (out.max_diversity - d) / out.max_diversity);
    }
    return out;
}

}  // namespace uavtraj
