#ifndef OLP_PATHS_HPP
#define OLP_PATHS_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "olp/hypergraph.hpp"

namespace olp {

/// Result of the exact longest ordered loose path computation: the maximal
/// length (edge count), one optimal edge sequence, and the edge-length
/// histogram of that sequence.
struct PathWitness {
    std::uint64_t lmax = 0;
    std::vector<Edge> witness;
    std::map<std::uint32_t, std::uint64_t> length_histogram;
};

/// Longest ordered loose path by dynamic programming over the DAG whose
/// arcs run first(e) -> last(e), scanning vertices in increasing order:
///   L[v] = max over edges e with last(e) = v of L[first(e)] + 1,
/// default 0, and lmax = max_v L[v]. Vertex-disjointness away from the
/// connector vertices is automatic because every vertex of e is below
/// last(e) = first(e') which is below every other vertex of e'.
/// The witness is deterministic: per vertex the parent edge is the first
/// maximizer in ascending edge-id order, and reconstruction starts at the
/// smallest vertex attaining lmax.
PathWitness longest_path(const OrderedHypergraph& h);

/// Exhaustive search over all increasing edge sequences. Independent of
/// the DP above; intended as its oracle on small instances.
/// Throws size_limit_exceeded when the edge count exceeds max_edges.
std::uint64_t longest_path_bruteforce(const OrderedHypergraph& h,
                                      std::size_t max_edges = 24);

/// Exact count of ordered loose paths of a given length.
struct PathCount {
    std::uint64_t ell = 0;
    unsigned __int128 count = 0;

    std::string str() const;
    double approx() const;
    bool operator==(const PathCount&) const = default;
};

/// Counts paths of length ell >= 1 via N[v][k] = sum over e with
/// last(e) = v of N[first(e)][k-1], N[v][0] = 1. 128-bit accumulation;
/// throws count_overflow if any value would wrap.
PathCount count_paths(const OrderedHypergraph& h, std::uint64_t ell);

/// Sentinel for vertices with no outgoing edge.
inline constexpr std::uint32_t kNoExtension =
    std::numeric_limits<std::uint32_t>::max();

/// For every vertex v, the minimum edge length among edges with
/// first(e) = v, or kNoExtension. Index 0 of the result is unused.
std::vector<std::uint32_t> min_extension_lengths(const OrderedHypergraph& h);

} // namespace olp

#endif
