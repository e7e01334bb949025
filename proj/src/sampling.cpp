#include "olp/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <unordered_set>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

double expected_edge_count(std::uint32_t n, std::uint32_t r, double p) {
    if (p <= 0.0) return 0.0;
    return std::exp(log_choose(n, r) + std::log(p));
}

namespace {

void check_pre(std::uint32_t n, std::uint32_t r, double p) {
    if (r < 2 || n < r) throw error("sample: need r >= 2 and n >= r");
    if (!(p >= 0.0 && p <= 1.0)) throw error("sample: p must lie in [0,1]");
}

// Exact binomial table C(a, b) for a <= n, b <= width-1, built by Pascal
// additions. Used only on the enumeration path, where C(n, r) <= 1e8, so
// every entry consulted is exactly representable in a double.
class ChooseTable {
public:
    ChooseTable(std::uint32_t n, std::uint32_t width)
        : width_(width), tab_((n + 1) * width, 0.0) {
        for (std::uint32_t a = 0; a <= n; ++a) {
            at(a, 0) = 1.0;
            for (std::uint32_t b = 1; b < width_ && b <= a; ++b) {
                at(a, b) = at(a - 1, b - 1) + at(a - 1, b);
            }
        }
    }
    double operator()(std::uint32_t a, std::uint32_t b) const {
        if (b >= width_) return 0.0;
        return tab_[a * width_ + b];
    }

private:
    double& at(std::uint32_t a, std::uint32_t b) { return tab_[a * width_ + b]; }
    std::uint32_t width_;
    std::vector<double> tab_;
};

// Lexicographic unrank of the rank-th r-subset of [1..n] into out.
void unrank_subset(std::uint64_t rank, std::uint32_t n, std::uint32_t r,
                   const ChooseTable& choose, std::uint32_t* out) {
    double rest = static_cast<double>(rank);
    std::uint32_t c = 1;
    for (std::uint32_t slot = 0; slot < r; ++slot) {
        const std::uint32_t remaining = r - 1 - slot;
        // smallest c with C(n - c, remaining) blocks of lower rank passed
        for (;; ++c) {
            const double cnt = choose(n - c, remaining);
            if (rest < cnt) break;
            rest -= cnt;
        }
        out[slot] = c;
        ++c;
    }
}

// Full enumeration in lexicographic order with geometric skips: the number
// of misses between edges is Geometric(p), which reproduces independent
// per-tuple Bernoulli(p) exactly. The common case advances only the final
// coordinate; crossing a prefix boundary falls back to unranking.
std::vector<std::uint32_t> enumerate_edges(std::uint32_t n, std::uint32_t r,
                                           double p, Rng& rng,
                                           std::uint64_t total) {
    std::vector<std::uint32_t> flat;
    if (p <= 0.0) return flat;
    const ChooseTable choose(n, r); // widths up to C(n, r-1) <= C(n, r)
    const double l1p = std::log1p(-p);
    std::vector<std::uint32_t> cur(r, 0);
    bool have_cur = false;
    std::uint64_t pos = 0;
    for (;;) {
        std::uint64_t skip = 0;
        if (p < 1.0) {
            skip = geometric_failures(rng, l1p);
            if (skip >= total) break;
        }
        if (pos > total - 1 - skip) break; // pos + skip >= total, no overflow
        pos += skip;
        if (have_cur && skip + cur[r - 1] <= n) {
            cur[r - 1] += static_cast<std::uint32_t>(skip);
        } else {
            unrank_subset(pos, n, r, choose, cur.data());
        }
        have_cur = true;
        flat.insert(flat.end(), cur.begin(), cur.end());
        ++pos;
        if (pos >= total) break;
        if (cur[r - 1] < n) {
            cur[r - 1] += 1;
        } else {
            have_cur = false; // next tuple changes a prefix coordinate
        }
    }
    return flat;
}

// Packs an ascending tuple into one 64-bit key when the labels fit.
struct TuplePacker {
    std::uint32_t bits;
    bool usable;
    explicit TuplePacker(std::uint32_t n, std::uint32_t r) {
        bits = std::bit_width(n);
        usable = static_cast<std::uint64_t>(bits) * r <= 64;
    }
    std::uint64_t pack(const std::uint32_t* vs, std::uint32_t r) const {
        std::uint64_t key = 0;
        for (std::uint32_t j = 0; j < r; ++j) key = (key << bits) | vs[j];
        return key;
    }
};

// Binomial edge count, then that many distinct r-subsets uniformly at
// random; duplicates are redrawn. Joint distribution equals independent
// per-tuple Bernoulli(p).
std::vector<std::uint32_t> reject_edges(std::uint32_t n, std::uint32_t r,
                                        double p, Rng& rng) {
    double total = std::exp(log_choose(n, r));
    double tuple_p = p;
    if (!std::isfinite(total)) {
        // C(n,r) overflows a double; the budget gate already capped the
        // mean, so a surrogate with the same mean is exact to ~1e-18
        const double mean = std::exp(log_choose(n, r) + std::log(p));
        total = 1e18;
        tuple_p = mean / total;
    }
    const std::uint64_t m = binomial_sample(rng, total, tuple_p);
    std::vector<std::uint32_t> flat;
    flat.reserve(m * r);
    const TuplePacker packer(n, r);
    std::unordered_set<std::uint64_t> seen_packed;
    std::set<std::vector<std::uint32_t>> seen_wide;
    if (packer.usable) seen_packed.reserve(m * 2);

    std::vector<std::uint32_t> tuple(r);
    for (std::uint64_t k = 0; k < m;) {
        bool distinct = true;
        for (std::uint32_t j = 0; j < r; ++j) {
            tuple[j] = static_cast<std::uint32_t>(rng.below(n)) + 1;
        }
        std::sort(tuple.begin(), tuple.end());
        for (std::uint32_t j = 1; j < r; ++j) {
            if (tuple[j] == tuple[j - 1]) {
                distinct = false;
                break;
            }
        }
        if (!distinct) continue;
        bool fresh;
        if (packer.usable) {
            fresh = seen_packed.insert(packer.pack(tuple.data(), r)).second;
        } else {
            fresh = seen_wide.insert(tuple).second;
        }
        if (!fresh) continue;
        flat.insert(flat.end(), tuple.begin(), tuple.end());
        ++k;
    }

    // canonical lexicographic edge order
    std::vector<std::uint64_t> ids(m);
    for (std::uint64_t i = 0; i < m; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](std::uint64_t a, std::uint64_t b) {
        return std::lexicographical_compare(
            flat.begin() + a * r, flat.begin() + (a + 1) * r,
            flat.begin() + b * r, flat.begin() + (b + 1) * r);
    });
    std::vector<std::uint32_t> sorted;
    sorted.reserve(flat.size());
    for (std::uint64_t id : ids) {
        sorted.insert(sorted.end(), flat.begin() + id * r,
                      flat.begin() + (id + 1) * r);
    }
    return sorted;
}

} // namespace

OrderedHypergraph sample_explicit(std::uint32_t n, std::uint32_t r, double p,
                                  RngSeed seed, const SampleOptions& opts) {
    check_pre(n, r, p);
    const double expected = expected_edge_count(n, r, p);
    if (expected > static_cast<double>(opts.max_expected_edges)) {
        throw budget_exceeded("expected edge count " + format_double(expected) +
                              " exceeds budget " +
                              std::to_string(opts.max_expected_edges) +
                              "; use the lazy backend");
    }
    Rng rng(seed);

    auto exact_total = exact_choose_capped(n, r, opts.enumeration_cap);
    bool enumerate = exact_total.has_value();
    if (opts.strategy == SampleOptions::Strategy::enumerate_all) {
        if (!enumerate) throw error("enumeration requested but C(n,r) too large");
    } else if (opts.strategy == SampleOptions::Strategy::reject) {
        enumerate = false;
    }

    std::vector<std::uint32_t> flat =
        enumerate ? enumerate_edges(n, r, p, rng, *exact_total)
                  : reject_edges(n, r, p, rng);
    return OrderedHypergraph::from_sorted_flat(n, r, std::move(flat));
}

UnitEdgeMask sample_unit_mask(std::uint32_t n, std::uint32_t r, double p,
                              RngSeed seed) {
    check_pre(n, r, p);
    Rng rng(seed);
    UnitEdgeMask mask;
    mask.n = n;
    mask.r = r;
    mask.present.resize(n - r + 1);
    for (auto& bit : mask.present) bit = rng.bernoulli(p) ? 1 : 0;
    return mask;
}

} // namespace olp
