#ifndef OLP_GOF_HPP
#define OLP_GOF_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "olp/experiment.hpp"
#include "olp/series.hpp"

namespace olp {

struct GofBin {
    std::uint64_t k_lo = 0; // counts k_lo..k_hi merged (k_hi = max -> open tail)
    std::uint64_t k_hi = 0;
    std::uint64_t observed = 0;
    double expected = 0.0;
};

struct GofReport {
    std::map<std::uint64_t, std::uint64_t> counts; // empirical histogram
    std::uint64_t trials = 0;
    double lambda = 0.0;
    double tv = 0.0;          // total variation distance to Poisson(lambda)
    double chi_square = 0.0;  // over tail-merged bins
    std::uint64_t dof = 0;    // bins - 1
    std::vector<GofBin> bins; // every bin has expected count >= 5
};

/// Exact total variation distance between a distribution given as
/// probabilities over {0..K} and Poisson(lambda); the Poisson mass beyond K
/// contributes in full.
double tv_to_poisson(const std::map<std::uint64_t, double>& dist,
                     double lambda);

/// Distribution comparison of observed nonnegative counts against
/// Poisson(lambda): TV distance plus a chi-square statistic whose bins are
/// merged until every expected count is at least 5. Requires lambda > 0 and
/// at least 500 observations (insufficient_trials otherwise).
GofReport poisson_gof(const std::vector<std::uint64_t>& counts, double lambda);

struct BandCheckResult {
    bool pass = false;
    double slack = 0.0;
    double lo = 0.0;   // band.lower * (1 - slack)
    double hi = 0.0;   // band.upper * (1 + slack)
    double margin = 0.0; // distance from the CI to the widened band (0 if inside)
};

/// Pass iff the 95% CI of the stats intersects the band widened by slack.
BandCheckResult band_check(const SummaryStats& stats, const Band& band,
                           double slack = 0.01);

} // namespace olp

#endif
