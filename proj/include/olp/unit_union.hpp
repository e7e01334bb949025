#ifndef OLP_UNIT_UNION_HPP
#define OLP_UNIT_UNION_HPP

#include <cstdint>
#include <vector>

#include "olp/hypergraph.hpp"

namespace olp {

struct UnitUnionResult {
    std::uint64_t count = 0;                // Y: number of blocks selected
    std::vector<std::uint32_t> positions;   // start vertices of the blocks
};

/// Left-to-right greedy over unit-length blocks: select start position j
/// (1-based) when the block is present and j >= last selected position
/// + r - 1, i.e. the new block begins at or after the previous block's last
/// vertex. The selection is a maximum-size union of loose paths among
/// unit-length edges (tested against the exhaustive oracle below).
UnitUnionResult unit_union_greedy(const UnitEdgeMask& mask);

/// Maximum over all feasible subsets of present blocks; n is capped.
std::uint64_t unit_union_bruteforce(const UnitEdgeMask& mask,
                                    std::uint32_t max_n = 14);

} // namespace olp

#endif
