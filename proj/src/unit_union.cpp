#include "olp/unit_union.hpp"

#include <algorithm>

#include "olp/errors.hpp"

namespace olp {

UnitUnionResult unit_union_greedy(const UnitEdgeMask& mask) {
    UnitUnionResult result;
    std::uint64_t next_allowed = 1; // smallest start position still usable
    for (std::uint32_t j = 1; j <= mask.positions(); ++j) {
        if (!mask.present[j - 1] || j < next_allowed) continue;
        result.positions.push_back(j);
        ++result.count;
        next_allowed = j + mask.r - 1; // block ends at j + r - 1
    }
    return result;
}

std::uint64_t unit_union_bruteforce(const UnitEdgeMask& mask,
                                    std::uint32_t max_n) {
    if (mask.n > max_n) {
        throw size_limit_exceeded("unit union brute force limited to n <= " +
                                  std::to_string(max_n));
    }
    std::vector<std::uint32_t> starts;
    for (std::uint32_t j = 1; j <= mask.positions(); ++j) {
        if (mask.present[j - 1]) starts.push_back(j);
    }
    const std::uint32_t k = static_cast<std::uint32_t>(starts.size());
    std::uint64_t best = 0;
    for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
        std::uint64_t size = 0;
        std::uint32_t prev_start = 0;
        bool feasible = true;
        for (std::uint32_t b = 0; b < k && feasible; ++b) {
            if (!(subset & (1u << b))) continue;
            if (size > 0 && starts[b] < prev_start + mask.r - 1) {
                feasible = false;
                break;
            }
            prev_start = starts[b];
            ++size;
        }
        if (feasible) best = std::max(best, size);
    }
    return best;
}

} // namespace olp
