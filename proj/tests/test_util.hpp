#ifndef OLP_TEST_UTIL_HPP
#define OLP_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "olp/hypergraph.hpp"
#include "olp/rng.hpp"
#include "olp/sampling.hpp"

namespace testutil {

inline olp::OrderedHypergraph make_graph(std::uint32_t n, std::uint32_t r,
                                         std::vector<std::vector<std::uint32_t>> raw) {
    std::vector<olp::Edge> edges;
    for (auto& vs : raw) edges.push_back(olp::Edge{std::move(vs)});
    return olp::OrderedHypergraph(n, r, std::move(edges));
}

/// Small random instance for oracle sweeps.
inline olp::OrderedHypergraph random_small(std::uint32_t n, std::uint32_t r,
                                           double p, std::uint64_t stream) {
    return olp::sample_explicit(n, r, p, {0xbeef, stream});
}

} // namespace testutil

#endif
