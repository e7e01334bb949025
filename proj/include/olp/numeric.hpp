#ifndef OLP_NUMERIC_HPP
#define OLP_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olp/rng.hpp"

namespace olp {

/// Thread-safe log Gamma(x).
double log_gamma(double x);

/// log C(n, r) via log-Gamma; valid far beyond 64-bit range.
double log_choose(double n, double r);

/// C(n, r) as a double (exact while the value stays below 2^53).
double choose_real(double n, double r);

/// Exact C(n, r) if it does not exceed cap, nullopt otherwise.
std::optional<std::uint64_t> exact_choose_capped(std::uint64_t n,
                                                 std::uint64_t r,
                                                 std::uint64_t cap);

/// (1 - p)^exponent evaluated as exp(exponent * log1p(-p)).
/// Stable for tiny p and huge exponents; underflow gives exact 0.
double pow1mp(double p, double exponent);

/// Row of binomial coefficients C(m, j) for j = 0..width-1, advanced one m
/// at a time with exact Pascal additions. Entries are doubles and remain
/// exact until they pass 2^53, after which they carry ~1 ulp relative error,
/// which is negligible inside exp().
class PascalRow {
public:
    /// Starts at m = m0.
    PascalRow(std::uint32_t m0, std::uint32_t width);

    double at(std::uint32_t j) const { return row_[j]; }

    /// Advance from C(m, .) to C(m+1, .).
    void advance();

private:
    std::vector<double> row_;
};

/// Binomial(trials, p) sample. trials may be huge (passed as a double).
/// Two-sided inversion around the mode while the mean is at most 10^6;
/// beyond 10^11 trials the binomial pmf is replaced by Poisson(mean),
/// whose distance from the true law is below p; above mean 10^6 a rounded
/// normal approximation takes over.
std::uint64_t binomial_sample(Rng& rng, double trials, double p);

/// Number of Bernoulli(p) failures before the first success, by inversion.
/// Returns a huge sentinel (> 4e18) cast saturated if p is 0.
std::uint64_t geometric_failures(Rng& rng, double log1m_p);

/// Truncated geometric over {0, .., limit-1}:
/// P(j) proportional to (1-p)^j. limit >= 1, p in (0, 1].
std::uint64_t truncated_geometric(Rng& rng, double p, double limit);

/// Decimal representation of an unsigned 128-bit value.
std::string u128_to_string(unsigned __int128 v);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

} // namespace olp

#endif
