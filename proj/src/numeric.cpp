#include "olp/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>

namespace olp {

double log_gamma(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double log_choose(double n, double r) {
    if (r < 0 || r > n) return -std::numeric_limits<double>::infinity();
    return log_gamma(n + 1.0) - log_gamma(r + 1.0) - log_gamma(n - r + 1.0);
}

double choose_real(double n, double r) {
    if (r < 0 || n < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double result = 1.0;
    for (double j = 1.0; j <= r; j += 1.0) {
        result *= (n - r + j) / j;
    }
    return result;
}

std::optional<std::uint64_t> exact_choose_capped(std::uint64_t n,
                                                 std::uint64_t r,
                                                 std::uint64_t cap) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 result = 1;
    for (std::uint64_t j = 1; j <= r; ++j) {
        // C(n-r+j, j) = C(n-r+j-1, j-1) * (n-r+j) / j, division exact
        result = result * (n - r + j) / j;
        if (result > static_cast<unsigned __int128>(cap) * 2) return std::nullopt;
    }
    if (result > cap) return std::nullopt;
    return static_cast<std::uint64_t>(result);
}

double pow1mp(double p, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (p >= 1.0) return 0.0;
    return std::exp(exponent * std::log1p(-p));
}

PascalRow::PascalRow(std::uint32_t m0, std::uint32_t width) : row_(width, 0.0) {
    if (!row_.empty()) row_[0] = 1.0;
    for (std::uint32_t m = 1; m <= m0; ++m) {
        for (std::uint32_t j = std::min<std::uint32_t>(m, width - 1); j >= 1; --j) {
            row_[j] += row_[j - 1];
        }
    }
}

void PascalRow::advance() {
    for (std::uint32_t j = static_cast<std::uint32_t>(row_.size()) - 1; j >= 1; --j) {
        row_[j] += row_[j - 1];
    }
}

namespace {

// Two-sided inversion around the mode. Any fixed visiting order gives the
// correct distribution; this one alternates mode, mode-1, mode+1, ...
std::uint64_t binomial_by_inversion(Rng& rng, double trials, double p) {
    const double mean = trials * p;
    const double mode = std::floor((trials + 1.0) * p);
    const double k0 = std::min(std::max(mode, 0.0), trials);
    const double log_pmf0 = log_choose(trials, k0) + k0 * std::log(p) +
                            (trials - k0) * std::log1p(-p);
    const double pmf0 = std::exp(log_pmf0);

    const double u = rng.uniform01();
    double down_pmf = pmf0, up_pmf = pmf0;
    double down_k = k0, up_k = k0;
    double acc = pmf0;
    if (u < acc) return static_cast<std::uint64_t>(k0);

    const double span = 60.0 * std::sqrt(mean + 1.0) + 100.0;
    for (;;) {
        bool moved = false;
        if (down_k > 0.0) {
            // pmf(k-1) = pmf(k) * k / ((trials-k+1) p / (1-p))
            down_pmf *= down_k * (1.0 - p) / ((trials - down_k + 1.0) * p);
            down_k -= 1.0;
            acc += down_pmf;
            moved = true;
            if (u < acc) return static_cast<std::uint64_t>(down_k);
        }
        if (up_k < trials && up_k - k0 < span) {
            up_pmf *= (trials - up_k) * p / ((up_k + 1.0) * (1.0 - p));
            up_k += 1.0;
            acc += up_pmf;
            moved = true;
            if (u < acc) return static_cast<std::uint64_t>(up_k);
        }
        if (!moved || (k0 - down_k >= span && up_k - k0 >= span)) {
            // residual mass below ~1e-300 plus normalization rounding
            return static_cast<std::uint64_t>(up_k);
        }
    }
}

// Same walk with Poisson(mean) probabilities. Used for huge trial counts,
// where the lgamma difference in the binomial pmf cancels catastrophically
// while TV(Binomial(n,p), Poisson(np)) <= p is already negligible.
std::uint64_t poisson_by_inversion(Rng& rng, double mean) {
    const double k0 = std::floor(mean);
    const double pmf0 = std::exp(k0 * std::log(mean) - mean - log_gamma(k0 + 1.0));

    const double u = rng.uniform01();
    double down_pmf = pmf0, up_pmf = pmf0;
    double down_k = k0, up_k = k0;
    double acc = pmf0;
    if (u < acc) return static_cast<std::uint64_t>(k0);

    const double span = 60.0 * std::sqrt(mean + 1.0) + 100.0;
    for (;;) {
        bool moved = false;
        if (down_k > 0.0) {
            down_pmf *= down_k / mean;
            down_k -= 1.0;
            acc += down_pmf;
            moved = true;
            if (u < acc) return static_cast<std::uint64_t>(down_k);
        }
        if (up_k - k0 < span) {
            up_pmf *= mean / (up_k + 1.0);
            up_k += 1.0;
            acc += up_pmf;
            moved = true;
            if (u < acc) return static_cast<std::uint64_t>(up_k);
        }
        if (!moved || (k0 - down_k >= span && up_k - k0 >= span)) {
            return static_cast<std::uint64_t>(up_k);
        }
    }
}

} // namespace

std::uint64_t binomial_sample(Rng& rng, double trials, double p) {
    if (trials <= 0.0 || p <= 0.0) return 0;
    if (p >= 1.0) return static_cast<std::uint64_t>(trials);
    const double mean = trials * p;
    if (mean <= 1e6) {
        if (trials > 1e11) return poisson_by_inversion(rng, mean);
        return binomial_by_inversion(rng, trials, p);
    }
    const double sd = std::sqrt(mean * (1.0 - p));
    double k = std::round(mean + sd * rng.normal());
    k = std::min(std::max(k, 0.0), trials);
    return static_cast<std::uint64_t>(k);
}

std::uint64_t geometric_failures(Rng& rng, double log1m_p) {
    const double u = rng.uniform01();
    const double k = std::floor(std::log1p(-u) / log1m_p);
    if (!(k < 4.0e18)) return UINT64_MAX;
    return static_cast<std::uint64_t>(k);
}

std::uint64_t truncated_geometric(Rng& rng, double p, double limit) {
    const double l1p = std::log1p(-p);
    const double total = -std::expm1(limit * l1p); // 1 - (1-p)^limit
    const double u = rng.uniform01();
    double j = std::floor(std::log1p(-u * total) / l1p);
    if (!(j >= 0.0)) j = 0.0;
    if (j > limit - 1.0) j = limit - 1.0;
    return static_cast<std::uint64_t>(j);
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace olp
