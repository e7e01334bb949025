#ifndef OLP_GREEDY_HPP
#define OLP_GREEDY_HPP

#include <cstdint>
#include <vector>

#include "olp/hypergraph.hpp"
#include "olp/rng.hpp"

namespace olp {

struct GreedyStep {
    Edge edge;
    std::uint32_t extension = 0; // edge length consumed by this step
};

/// Path built by the greedy rule, one step per edge. The steps form a valid
/// ordered loose path: consecutive edges share exactly the connector vertex.
struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::uint32_t terminal = 1; // last vertex reached (1 when no step taken)

    std::uint64_t step_count() const { return steps.size(); }
    std::uint64_t consumed() const; // sum of extensions
};

/// Greedy walk on a realized hypergraph: start at vertex 1; among edges
/// with first(e) equal to the current vertex pick one minimizing last(e),
/// breaking ties by lexicographically smallest internal tuple; stop when
/// no extension exists.
GreedyTrace greedy_path(const OrderedHypergraph& h);

/// Greedy walk without materializing the hypergraph. From the current
/// vertex v, candidate last vertices are scanned upward; the candidate at
/// offset i is hit with probability 1 - (1-p)^C(r-2+i, r-2), and internal
/// vertices are drawn as the lexicographically first present tuple. Because
/// tuples starting at distinct vertices are disjoint, the resulting trace
/// has exactly the distribution of greedy_path on sample_explicit(n, r, p).
/// The walk terminates when no candidate fits below n (truncation by
/// termination, not conditioning).
GreedyTrace greedy_path_lazy(std::uint32_t n, std::uint32_t r, double p,
                             RngSeed seed);

/// One untruncated greedy extension length: value r-1+i with probability
/// (1-p)^C(r-2+i, r-1) * (1 - (1-p)^C(r-2+i, r-2)). For p in (0, 1] the
/// residual "no edge ever" outcome has probability zero and the draw
/// terminates almost surely. For r = 2 this is 1 + Geometric(p) failures.
std::uint64_t sample_extension(std::uint32_t r, double p, Rng& rng);
std::uint64_t sample_extension(std::uint32_t r, double p, RngSeed seed);

} // namespace olp

#endif
