#include "olp/regimes.hpp"

#include <algorithm>
#include <cmath>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

namespace {

constexpr double kE = 2.718281828459045235;

void check_np(double n, std::uint32_t r, double p, bool open_unit) {
    if (r < 2 || !(n >= r)) throw error("regimes: need r >= 2 and n >= r");
    if (open_unit ? !(p > 0.0 && p < 1.0) : !(p > 0.0 && p <= 1.0)) {
        throw error("regimes: p out of range");
    }
}

} // namespace

Band dense_band(double n, std::uint32_t r, double p) {
    check_np(n, r, p, /*open_unit=*/true);
    const Band mean = expected_extension_bounds(r, p);
    const double rd = static_cast<double>(r);
    const double lower = n / mean.upper;
    const double upper = n * (1.0 / rd + 1.0 / (rd * (rd - 2.0 + 1.0 / p)));
    return Band{lower, upper, "dense-lower", "dense-upper"};
}

double first_moment_length(double n, std::uint32_t r, double p) {
    check_np(n, r, p, true);
    const double rm1 = static_cast<double>(r) - 1.0;
    return std::pow(4.0, 1.0 / rm1) * kE / rm1 * n * std::pow(p, 1.0 / rm1);
}

double second_moment_length(double n, std::uint32_t r, double p) {
    check_np(n, r, p, true);
    const double rm1 = static_cast<double>(r) - 1.0;
    const double value = n * std::pow(p, 1.0 / rm1) / (8.0 * rm1) - 1.0 / rm1;
    return std::max(value, 0.0);
}

double log_expected_path_count(double n, std::uint32_t r, double p,
                               std::uint64_t ell) {
    check_np(n, r, p, false);
    if (ell < 1) throw error("regimes: ell must be >= 1");
    const double s = static_cast<double>(ell) * (r - 1.0) + 1.0;
    return log_choose(n, s) + static_cast<double>(ell) * std::log(p);
}

double expected_path_count(double n, std::uint32_t r, double p,
                           std::uint64_t ell) {
    return std::exp(log_expected_path_count(n, r, p, ell));
}

namespace {

double log_ell0_equation(double n, std::uint32_t r, double p, double x) {
    return (r - 1.0 + 1.0 / x) * (std::log(n) - std::log(x)) + std::log(p);
}

} // namespace

double ell0_equation(double n, std::uint32_t r, double p, double x) {
    check_np(n, r, p, true);
    if (!(x > 0.0)) throw error("regimes: x must be positive");
    return std::exp(log_ell0_equation(n, r, p, x));
}

Ell0Result solve_ell0(double n, std::uint32_t r, double p) {
    check_np(n, r, p, true);
    auto g = [&](double x) { return log_ell0_equation(n, r, p, x); };

    double lo = 1.0;
    if (!(g(lo) > 0.0)) {
        throw no_bracket("solve_ell0: f(1) <= 1, p below the solvable range");
    }
    double hi = std::min(10.0 * std::log(n), n);
    while (g(hi) >= 0.0) {
        if (hi >= n) throw no_bracket("solve_ell0: f does not cross 1 on [1, n]");
        lo = hi;
        hi = std::min(hi * 2.0, n);
    }

    Ell0Result result;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    // log f is strictly decreasing in x, so plain bisection converges
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-14 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    result.root = 0.5 * (lo + hi);
    result.residual = std::fabs(std::expm1(g(result.root)));
    return result;
}

double poisson_lambda(double c, std::uint32_t r, std::uint64_t ell) {
    if (!(c > 0.0)) throw error("regimes: c must be positive");
    if (r < 2 || ell < 1) throw error("regimes: need r >= 2 and ell >= 1");
    const double k = static_cast<double>(ell) * (r - 1.0) + 1.0;
    return std::exp(static_cast<double>(ell) * std::log(c) - log_gamma(k + 1.0));
}

std::pair<double, double> sparse_window(double n, std::uint32_t r,
                                        std::uint64_t ell) {
    if (r < 3) throw error("regimes: sparse window needs r >= 3");
    if (ell < 2) throw error("regimes: sparse window needs ell >= 2");
    if (!(n >= r)) throw error("regimes: need n >= r");
    const double low = std::pow(n, -(r - 1.0 + 1.0 / static_cast<double>(ell)));
    const double high =
        std::pow(n, -(r - 1.0 + 1.0 / (static_cast<double>(ell) + 1.0)));
    return {low, high};
}

RegimePrediction classify_regime(double n, std::uint32_t r, double p) {
    check_np(n, r, p, true);
    const double rd = static_cast<double>(r);
    const double ln_n = std::log(n);
    const double upper_boundary = std::sqrt(ln_n) / std::pow(n, (rd - 1.0) / 4.0);
    const double middle_boundary = std::pow(n, -(rd - 1.0) / 2.0);
    const double lower_boundary = std::pow(ln_n / n, rd - 1.0);

    RegimePrediction out;
    out.notes = "cutoffs: dense p>=0.01; T1.2-upper p>=" +
                format_double(upper_boundary) + "; T1.3 p>=" +
                format_double(middle_boundary) + "; T1.2-lower p>=" +
                format_double(lower_boundary) +
                "; bands carry no (1+o(1)) correction";

    if (p >= 0.01) {
        out.regime = Regime::dense;
        out.label = "T1.1-dense";
        out.band = dense_band(n, r, p);
        return out;
    }
    if (p >= upper_boundary) {
        out.regime = Regime::greedy_range;
        out.label = "T1.2-upper";
        const double mean_ext = expected_extension_series(r, p, 1e-10).value;
        out.band = Band{std::max((n - 1.0) / mean_ext - 1.0, 0.0),
                        first_moment_length(n, r, p), "greedy-accounting",
                        "first-moment"};
        return out;
    }
    if (p >= middle_boundary) {
        out.regime = Regime::middle;
        out.label = "T1.3-middle";
        // guaranteed short extensions of span d give ~n/d edges
        const double d = (rd - 1.0) * std::pow(2.0 * ln_n / p, 1.0 / (rd - 1.0));
        out.band = Band{std::max(n / d - 1.0, 0.0), first_moment_length(n, r, p),
                        "short-extension-walk", "first-moment"};
        return out;
    }
    if (p >= lower_boundary) {
        out.regime = Regime::second_moment;
        out.label = "T1.2-lower";
        out.band = Band{second_moment_length(n, r, p),
                        first_moment_length(n, r, p), "second-moment",
                        "first-moment"};
        return out;
    }
    if (r >= 3 && p >= std::pow(n, -(rd - 1.0))) {
        out.regime = Regime::log_range;
        out.label = "T1.4-log";
        const auto ell0 = solve_ell0(n, r, p);
        out.band = Band{std::max((ell0.root / 4.0 - 1.0) / (rd - 1.0), 0.0),
                        (2.0 * kE * (rd - 1.0) * ell0.root - 1.0) / (rd - 1.0),
                        "ell0-lower", "ell0-upper"};
        out.notes += "; ell0=" + format_double(ell0.root);
        return out;
    }
    if (r >= 3 && p > std::pow(n, -(rd - 1.0 + 0.5))) {
        // exponent beta with p = n^-beta lands in the window of exactly one ell
        const double beta = -std::log(p) / ln_n;
        const double x = beta - (rd - 1.0);
        const std::uint64_t ell =
            static_cast<std::uint64_t>(std::max(std::floor(1.0 / x), 2.0));
        out.regime = Regime::sparse_exact;
        out.label = "T1.5-sparse(ell=" + std::to_string(ell) + ")";
        out.sparse_ell = ell;
        out.band = Band{static_cast<double>(ell), static_cast<double>(ell),
                        "exact-ell", "exact-ell"};
        return out;
    }
    out.regime = Regime::below_range;
    out.label = "below-range";
    const double trivial = std::floor((n - 1.0) / (rd - 1.0));
    out.band = Band{0.0, trivial, "trivial", "trivial"};
    out.notes += "; p below the covered ranges (no prediction)";
    return out;
}

} // namespace olp
