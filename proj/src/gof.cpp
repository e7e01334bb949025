#include "olp/gof.hpp"

#include <algorithm>
#include <cmath>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

namespace {

double poisson_pmf(std::uint64_t k, double lambda) {
    return std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                    log_gamma(static_cast<double>(k) + 1.0));
}

} // namespace

double tv_to_poisson(const std::map<std::uint64_t, double>& dist,
                     double lambda) {
    if (!(lambda > 0.0)) throw error("tv_to_poisson: lambda must be positive");
    const std::uint64_t kmax = dist.empty() ? 0 : dist.rbegin()->first;
    double total = 0.0;
    double poisson_covered = 0.0;
    for (std::uint64_t k = 0; k <= kmax; ++k) {
        const double pk = poisson_pmf(k, lambda);
        poisson_covered += pk;
        const auto it = dist.find(k);
        const double ek = (it == dist.end()) ? 0.0 : it->second;
        total += std::fabs(ek - pk);
    }
    total += std::max(1.0 - poisson_covered, 0.0); // Poisson mass beyond kmax
    return 0.5 * total;
}

GofReport poisson_gof(const std::vector<std::uint64_t>& counts, double lambda) {
    if (!(lambda > 0.0)) throw error("poisson_gof: lambda must be positive");
    if (counts.size() < 500) {
        throw insufficient_trials("poisson_gof: need at least 500 trials, got " +
                                  std::to_string(counts.size()));
    }
    GofReport rep;
    rep.lambda = lambda;
    rep.trials = counts.size();
    for (std::uint64_t c : counts) ++rep.counts[c];

    std::map<std::uint64_t, double> dist;
    for (const auto& [k, c] : rep.counts) {
        dist[k] = static_cast<double>(c) / static_cast<double>(rep.trials);
    }
    rep.tv = tv_to_poisson(dist, lambda);

    // chi-square with adjacent bins merged left to right until each bin's
    // expected count reaches 5; the final bin absorbs the whole Poisson tail
    const double trials = static_cast<double>(rep.trials);
    const std::uint64_t kmax = rep.counts.rbegin()->first;
    GofBin bin;
    bin.k_lo = 0;
    double covered = 0.0;
    for (std::uint64_t k = 0; k <= kmax; ++k) {
        const double pk = poisson_pmf(k, lambda);
        covered += pk;
        bin.expected += trials * pk;
        const auto it = rep.counts.find(k);
        bin.observed += (it == rep.counts.end()) ? 0 : it->second;
        bin.k_hi = k;
        if (bin.expected >= 5.0 && k < kmax) {
            rep.bins.push_back(bin);
            bin = GofBin{};
            bin.k_lo = k + 1;
        }
    }
    bin.expected += trials * std::max(1.0 - covered, 0.0); // open tail
    bin.k_hi = kmax;
    rep.bins.push_back(bin);
    if (rep.bins.size() >= 2 && rep.bins.back().expected < 5.0) {
        auto tail = rep.bins.back();
        rep.bins.pop_back();
        rep.bins.back().expected += tail.expected;
        rep.bins.back().observed += tail.observed;
        rep.bins.back().k_hi = tail.k_hi;
    }

    rep.chi_square = 0.0;
    for (const auto& b : rep.bins) {
        const double d = static_cast<double>(b.observed) - b.expected;
        rep.chi_square += d * d / b.expected;
    }
    rep.dof = rep.bins.size() > 1 ? rep.bins.size() - 1 : 0;
    return rep;
}

BandCheckResult band_check(const SummaryStats& stats, const Band& band,
                           double slack) {
    if (!(band.lower <= band.upper)) throw error("band_check: inverted band");
    BandCheckResult res;
    res.slack = slack;
    res.lo = band.lower * (1.0 - slack);
    res.hi = band.upper * (1.0 + slack);
    res.pass = stats.ci_hi >= res.lo && stats.ci_lo <= res.hi;
    if (res.pass) {
        res.margin = 0.0;
    } else if (stats.ci_hi < res.lo) {
        res.margin = res.lo - stats.ci_hi;
    } else {
        res.margin = stats.ci_lo - res.hi;
    }
    return res;
}

} // namespace olp
