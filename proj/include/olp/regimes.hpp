#ifndef OLP_REGIMES_HPP
#define OLP_REGIMES_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "olp/series.hpp"

namespace olp {

/// Predicted band for the dense regime (T1.1), in edge-count units:
///   lower = n / (r - p - r(1-p)^r + (pr+1)(1-p)^r p^-2)
///   upper = n (1/r + 1/(r (r - 2 + 1/p))).
Band dense_band(double n, std::uint32_t r, double p);

/// First-moment cutoff: no path longer than
///   (4^{1/(r-1)} e / (r-1)) * n * p^{1/(r-1)}  (T1.2/T1.3 upper).
double first_moment_length(double n, std::uint32_t r, double p);

/// Second-moment guarantee: a path of length
///   n p^{1/(r-1)} / (8(r-1)) - 1/(r-1)  (T1.2 lower branch),
/// floored at 0.
double second_moment_length(double n, std::uint32_t r, double p);

/// log of the expected number of paths of length ell,
/// log C(n, ell(r-1)+1) + ell log p.
double log_expected_path_count(double n, std::uint32_t r, double p,
                               std::uint64_t ell);
double expected_path_count(double n, std::uint32_t r, double p,
                           std::uint64_t ell);

/// The strictly decreasing profile f(x) = (n/x)^{r-1+1/x} * p whose unit
/// root defines the length scale ell0 of the logarithmic regime (T1.4).
double ell0_equation(double n, std::uint32_t r, double p, double x);

struct Ell0Result {
    double root = 0.0;
    double bracket_lo = 0.0; // bracket actually used for bisection
    double bracket_hi = 0.0;
    double residual = 0.0;   // |f(root) - 1|
};

/// Solves f(x) = 1 by expanding the bracket [1, 10 log n] (doubling, capped
/// at n) and bisecting. Throws no_bracket when f does not cross 1 there,
/// which signals p outside the regime. Residual is at most 1e-9.
Ell0Result solve_ell0(double n, std::uint32_t r, double p);

/// Poisson rate for the sparse count limit (T1.5):
///   lambda = c^ell / (ell(r-1) + 1)!.
double poisson_lambda(double c, std::uint32_t r, std::uint64_t ell);

/// The p-window of the exact-length sparse regime (T1.5) for a given ell:
///   ( n^{-(r-1+1/ell)}, n^{-(r-1+1/(ell+1))} ).
std::pair<double, double> sparse_window(double n, std::uint32_t r,
                                        std::uint64_t ell);

enum class Regime {
    dense,          // T1.1
    greedy_range,   // T1.2 upper branch
    middle,         // T1.3
    second_moment,  // T1.2 lower branch
    log_range,      // T1.4
    sparse_exact,   // T1.5
    below_range,
};

/// Which regime governs (n, r, p), with a predicted band in edge-count
/// units. Asymptotic range conditions are rendered with fixed, documented
/// cutoffs (see notes in the result):
///   dense        p >= 0.01
///   T1.2 upper   p >= sqrt(log n) / n^{(r-1)/4}
///   T1.3         p >= n^{-(r-1)/2}
///   T1.2 lower   p >= (log n)^{r-1} / n^{r-1}
///   T1.4 (r>=3)  p >= n^{-(r-1)}
///   T1.5 (r>=3)  p >  n^{-(r-1+1/2)}, ell from the exponent window
/// Anything below is flagged below-range. Exactly one regime per input.
struct RegimePrediction {
    Regime regime = Regime::below_range;
    std::string label;       // e.g. "T1.5-sparse(ell=2)"
    std::uint64_t sparse_ell = 0;
    Band band;
    std::string notes;
};

RegimePrediction classify_regime(double n, std::uint32_t r, double p);

} // namespace olp

#endif
