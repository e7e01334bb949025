#include "olp/paths.hpp"

#include <algorithm>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

PathWitness longest_path(const OrderedHypergraph& h) {
    const std::uint32_t n = h.vertex_count();
    const std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint64_t> best(n + 1, 0);
    std::vector<std::uint32_t> parent(n + 1, kNoParent);

    for (std::uint32_t v = 1; v <= n; ++v) {
        for (std::uint32_t id : h.edges_last_at(v)) {
            const std::uint64_t cand = best[h.first(id)] + 1;
            if (cand > best[v]) {
                best[v] = cand;
                parent[v] = id;
            }
        }
    }

    PathWitness result;
    std::uint32_t end = 0;
    for (std::uint32_t v = 1; v <= n; ++v) {
        if (best[v] > result.lmax) {
            result.lmax = best[v];
            end = v;
        }
    }
    if (result.lmax == 0) return result;

    std::uint32_t v = end;
    while (parent[v] != kNoParent) {
        const std::uint32_t id = parent[v];
        result.witness.push_back(h.edge_copy(id));
        v = h.first(id);
    }
    std::reverse(result.witness.begin(), result.witness.end());
    for (const auto& e : result.witness) ++result.length_histogram[e.length()];
    return result;
}

namespace {

std::uint64_t extend_chains(const OrderedHypergraph& h, std::uint32_t from,
                            std::uint64_t depth) {
    std::uint64_t best = depth;
    for (std::size_t id = 0; id < h.edge_count(); ++id) {
        if (h.first(id) == from) {
            best = std::max(best, extend_chains(h, h.last(id), depth + 1));
        }
    }
    return best;
}

} // namespace

std::uint64_t longest_path_bruteforce(const OrderedHypergraph& h,
                                      std::size_t max_edges) {
    if (h.edge_count() > max_edges) {
        throw size_limit_exceeded("brute force limited to " +
                                  std::to_string(max_edges) + " edges, got " +
                                  std::to_string(h.edge_count()));
    }
    std::uint64_t best = 0;
    for (std::size_t id = 0; id < h.edge_count(); ++id) {
        best = std::max(best, extend_chains(h, h.last(id), 1));
    }
    return best;
}

std::string PathCount::str() const { return u128_to_string(count); }

double PathCount::approx() const { return static_cast<double>(count); }

PathCount count_paths(const OrderedHypergraph& h, std::uint64_t ell) {
    if (ell < 1) throw error("count_paths: ell must be >= 1");
    const std::uint32_t n = h.vertex_count();
    std::vector<unsigned __int128> prev(n + 1, 1); // k = 0: empty path at v
    std::vector<unsigned __int128> cur(n + 1, 0);
    for (std::uint64_t k = 1; k <= ell; ++k) {
        std::fill(cur.begin(), cur.end(), 0);
        for (std::uint32_t v = 1; v <= n; ++v) {
            unsigned __int128 acc = 0;
            for (std::uint32_t id : h.edges_last_at(v)) {
                const unsigned __int128 add = prev[h.first(id)];
                acc += add;
                if (acc < add) throw count_overflow("count_paths: 128-bit overflow");
            }
            cur[v] = acc;
        }
        std::swap(prev, cur);
    }
    unsigned __int128 total = 0;
    for (std::uint32_t v = 1; v <= n; ++v) {
        total += prev[v];
        if (total < prev[v]) throw count_overflow("count_paths: 128-bit overflow");
    }
    return PathCount{ell, total};
}

std::vector<std::uint32_t> min_extension_lengths(const OrderedHypergraph& h) {
    std::vector<std::uint32_t> out(h.vertex_count() + 1, kNoExtension);
    for (std::uint32_t v = 1; v <= h.vertex_count(); ++v) {
        auto [b, e] = h.edges_first_at(v);
        for (std::uint32_t id = b; id < e; ++id) {
            out[v] = std::min(out[v], h.length(id));
        }
    }
    return out;
}

} // namespace olp
