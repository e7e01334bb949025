#ifndef OLP_SAMPLING_HPP
#define OLP_SAMPLING_HPP

#include <cstdint>

#include "olp/hypergraph.hpp"
#include "olp/rng.hpp"

namespace olp {

struct SampleOptions {
    /// Budget on the expected edge count C(n,r) * p; exceeding it raises
    /// budget_exceeded, signalling the caller to use the lazy backend.
    std::uint64_t max_expected_edges = 10'000'000;

    /// Strategy selection. Automatic: full enumeration of r-subsets with a
    /// geometric skip when C(n,r) <= enumeration_cap, otherwise draw the edge
    /// count m ~ Binomial(C(n,r), p) and sample m distinct r-subsets
    /// uniformly by rejection. Both produce the H(r)(n,p) distribution.
    enum class Strategy { automatic, enumerate_all, reject } strategy =
        Strategy::automatic;

    std::uint64_t enumeration_cap = 100'000'000;
};

/// Expected edge count C(n,r) * p, computed in log space.
double expected_edge_count(std::uint32_t n, std::uint32_t r, double p);

/// Samples H(r)(n,p): every r-subset of [1..n] is an edge independently
/// with probability p. Deterministic per seed.
OrderedHypergraph sample_explicit(std::uint32_t n, std::uint32_t r, double p,
                                  RngSeed seed, const SampleOptions& opts = {});

/// Samples the unit-length sub-hypergraph only: n-r+1 independent
/// Bernoulli(p) entries, entry j for the block {j+1, ..., j+r}.
UnitEdgeMask sample_unit_mask(std::uint32_t n, std::uint32_t r, double p,
                              RngSeed seed);

} // namespace olp

#endif
