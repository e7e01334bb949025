#include "olp/greedy.hpp"

#include <cmath>

#include "olp/errors.hpp"
#include "olp/numeric.hpp"

namespace olp {

std::uint64_t GreedyTrace::consumed() const {
    std::uint64_t total = 0;
    for (const auto& s : steps) total += s.extension;
    return total;
}

GreedyTrace greedy_path(const OrderedHypergraph& h) {
    GreedyTrace trace;
    std::uint32_t v = 1;
    for (;;) {
        auto [b, e] = h.edges_first_at(v);
        if (b == e) break;
        // ids in [b, e) are lex sorted, so the first edge seen with the
        // minimal last vertex also has the smallest internal tuple
        std::uint32_t pick = b;
        for (std::uint32_t id = b + 1; id < e; ++id) {
            if (h.last(id) < h.last(pick)) pick = id;
        }
        trace.steps.push_back({h.edge_copy(pick), h.length(pick)});
        v = h.last(pick);
        trace.terminal = v;
    }
    return trace;
}

namespace {

// Lexicographic rank -> k-subset of {0, .., m-1}; double-precision
// binomials, exact whenever counts stay below 2^53.
void unrank_internal(double rank, std::uint32_t m, std::uint32_t k,
                     std::vector<std::uint32_t>& out) {
    out.clear();
    std::uint32_t c = 0;
    for (std::uint32_t slot = 0; slot < k; ++slot) {
        for (;; ++c) {
            const double cnt =
                choose_real(static_cast<double>(m) - 1.0 - c,
                            static_cast<double>(k) - 1.0 - slot);
            if (rank < cnt) break;
            rank -= cnt;
        }
        out.push_back(c);
        ++c;
    }
}

// Given that some edge from v ends exactly at w (offset i, tuple_count
// internal tuples each present independently with probability p and at
// least one present), draw the lexicographically first present tuple and
// assemble the full edge.
Edge draw_edge_at_offset(Rng& rng, double p, std::uint32_t v, std::uint32_t w,
                         std::uint32_t r, double tuple_count,
                         std::vector<std::uint32_t>& scratch) {
    Edge edge;
    edge.vertices.reserve(r);
    edge.vertices.push_back(v);
    if (r > 2) {
        const std::uint64_t rank = truncated_geometric(rng, p, tuple_count);
        unrank_internal(static_cast<double>(rank), w - v - 1, r - 2, scratch);
        for (std::uint32_t idx : scratch) edge.vertices.push_back(v + 1 + idx);
    }
    edge.vertices.push_back(w);
    return edge;
}

} // namespace

GreedyTrace greedy_path_lazy(std::uint32_t n, std::uint32_t r, double p,
                             RngSeed seed) {
    if (r < 2 || n < r) throw error("greedy_path_lazy: need r >= 2 and n >= r");
    if (!(p > 0.0 && p <= 1.0)) throw error("greedy_path_lazy: p must lie in (0,1]");
    Rng rng(seed);
    GreedyTrace trace;
    std::vector<std::uint32_t> scratch;
    const double l1p = std::log1p(-p);

    std::uint32_t v = 1;
    for (;;) {
        const std::uint32_t room = n - v;
        if (room < r - 1) break;
        bool extended = false;
        PascalRow row(r - 2, r); // row.at(j) = C(r-2+i, j) at offset i = 0
        for (std::uint32_t i = 0; i + (r - 1) <= room; ++i) {
            const double tuples = row.at(r - 2); // C(r-2+i, r-2)
            const double hit = -std::expm1(tuples * l1p);
            if (rng.bernoulli(hit)) {
                const std::uint32_t w = v + (r - 1) + i;
                Edge edge = draw_edge_at_offset(rng, p, v, w, r, tuples, scratch);
                trace.steps.push_back({std::move(edge), (r - 1) + i});
                v = w;
                trace.terminal = v;
                extended = true;
                break;
            }
            row.advance();
        }
        if (!extended) break;
    }
    return trace;
}

std::uint64_t sample_extension(std::uint32_t r, double p, Rng& rng) {
    if (r < 2) throw error("sample_extension: need r >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw error("sample_extension: p must lie in (0,1]");
    if (r == 2) {
        if (p >= 1.0) return 1;
        return 1 + geometric_failures(rng, std::log1p(-p));
    }
    const double l1p = std::log1p(-p);
    PascalRow row(r - 2, r);
    for (std::uint64_t i = 0;; ++i) {
        const double hit = -std::expm1(row.at(r - 2) * l1p);
        if (rng.bernoulli(hit)) return (r - 1) + i;
        row.advance();
    }
}

std::uint64_t sample_extension(std::uint32_t r, double p, RngSeed seed) {
    Rng rng(seed);
    return sample_extension(r, p, rng);
}

} // namespace olp
