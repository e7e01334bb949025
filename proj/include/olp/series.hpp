#ifndef OLP_SERIES_HPP
#define OLP_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace olp {

/// A closed interval with provenance tags naming the formulas behind each
/// endpoint.
struct Band {
    double lower = 0.0;
    double upper = 0.0;
    std::string lower_formula;
    std::string upper_formula;
};

/// Truncated evaluation of the expected greedy extension length.
struct ExpectationResult {
    double value = 0.0;
    std::uint64_t truncation_index = 0; // last term index included
    double tail_bound = 0.0;            // rigorous bound on the dropped tail
    std::vector<double> terms;          // per-term values when requested
};

/// Probability that no extension of offset < i exists from the current
/// vertex: (1-p)^C(r-2+i, r-1).
double extension_survival_prob(std::uint32_t r, double p, std::uint64_t i);

/// Probability that some extension ends exactly at offset i:
/// 1 - (1-p)^C(r-2+i, r-2).
double extension_hit_prob(std::uint32_t r, double p, std::uint64_t i);

/// Mean extension length: sum over i >= 0 of
///   (r-1+i) * survival(i) * hit(i),
/// truncated once a geometric bound on the remaining tail drops below tol.
/// Successive crude term bounds b_i = (r-1+i) * survival(i) have ratio
/// rho_i = ((r+i)/(r-1+i)) * (1 - hit(i)), which is non-increasing in i, so
/// once rho_i < 1 the tail after term i is at most b_i * rho_i / (1 - rho_i).
/// Terms are Kahan-summed. Converges for every p in (0, 1].
ExpectationResult expected_extension_series(std::uint32_t r, double p,
                                            double tol = 1e-10,
                                            bool keep_terms = false);

/// Closed-form sandwich for the same expectation:
///   lower = r - p - r(1-p)^r
///   upper = lower + (pr+1)(1-p)^r / p^2.
Band expected_extension_bounds(std::uint32_t r, double p);

} // namespace olp

#endif
