#include "olp/series.hpp"

#include <cmath>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

namespace {

void check_rp(std::uint32_t r, double p) {
    if (r < 2) throw error("series: need r >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw error("series: p must lie in [0,1]");
}

} // namespace

double extension_survival_prob(std::uint32_t r, double p, std::uint64_t i) {
    check_rp(r, p);
    PascalRow row(r - 2, r);
    for (std::uint64_t k = 0; k < i; ++k) row.advance();
    return pow1mp(p, row.at(r - 1));
}

double extension_hit_prob(std::uint32_t r, double p, std::uint64_t i) {
    check_rp(r, p);
    PascalRow row(r - 2, r);
    for (std::uint64_t k = 0; k < i; ++k) row.advance();
    return -std::expm1(row.at(r - 2) * std::log1p(-p));
}

ExpectationResult expected_extension_series(std::uint32_t r, double p,
                                            double tol, bool keep_terms) {
    check_rp(r, p);
    if (!(p > 0.0)) throw error("series: p must be positive");
    if (!(tol > 0.0)) throw error("series: tol must be positive");

    ExpectationResult result;
    const double l1p = std::log1p(-p);
    PascalRow row(r - 2, r); // row.at(j) = C(r-2+i, j)
    double sum = 0.0, carry = 0.0;

    for (std::uint64_t i = 0;; ++i) {
        const double value = static_cast<double>(r) - 1.0 + static_cast<double>(i);
        const double survive = (row.at(r - 1) == 0.0)
                                   ? 1.0
                                   : std::exp(row.at(r - 1) * l1p);
        const double hit = -std::expm1(row.at(r - 2) * l1p);
        const double term = value * survive * hit;

        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        if (keep_terms) result.terms.push_back(term);
        result.truncation_index = i;

        if (survive == 0.0) { // all later terms are exactly zero
            result.tail_bound = 0.0;
            break;
        }
        const double bound = value * survive;
        const double ratio = ((value + 1.0) / value) * (1.0 - hit);
        if (ratio < 1.0) {
            const double tail = bound * ratio / (1.0 - ratio);
            if (tail < tol) {
                result.tail_bound = tail;
                break;
            }
        }
        row.advance();
    }
    result.value = sum;
    return result;
}

Band expected_extension_bounds(std::uint32_t r, double p) {
    check_rp(r, p);
    if (!(p > 0.0)) throw error("series: p must be positive");
    const double rd = static_cast<double>(r);
    const double q_pow_r = pow1mp(p, rd);
    const double lower = rd - p - rd * q_pow_r;
    const double upper = lower + (p * rd + 1.0) * q_pow_r / (p * p);
    return Band{lower, upper, "extension-mean-lower", "extension-mean-upper"};
}

} // namespace olp
