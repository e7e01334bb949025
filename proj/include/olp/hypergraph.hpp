#ifndef OLP_HYPERGRAPH_HPP
#define OLP_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace olp {

/// One edge of an ordered r-uniform hypergraph: a strictly increasing
/// r-tuple of vertex labels. Labels are 1-based throughout the library.
struct Edge {
    std::vector<std::uint32_t> vertices;

    std::uint32_t first() const { return vertices.front(); }
    std::uint32_t last() const { return vertices.back(); }
    /// Span last - first; at least r-1 for a valid edge.
    std::uint32_t length() const { return last() - first(); }

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return vertices < o.vertices; }
};

inline std::uint32_t edge_length(const Edge& e) { return e.length(); }

enum class ViolationKind {
    none,
    bad_parameters,
    bad_uniformity,
    not_ascending,
    vertex_out_of_range,
    duplicate_edge,
    index_mismatch,
};

struct ValidationReport {
    bool ok = true;
    ViolationKind kind = ViolationKind::none;
    std::size_t edge_index = 0; // first offending edge, when applicable
    std::string message;

    static ValidationReport good() { return {}; }
    static ValidationReport bad(ViolationKind k, std::size_t idx, std::string msg);
};

/// Checks the edge-list invariants against (n, r) without building indexes.
ValidationReport validate_edges(std::uint32_t n, std::uint32_t r,
                                std::span<const Edge> edges);

/// An ordered r-uniform hypergraph on vertices [1..n]. Immutable after
/// construction and safe to share across threads. Edges are canonicalized
/// to lexicographic order; endpoint indexes are built once:
///   - edges grouped by first vertex (contiguous id ranges),
///   - edge ids grouped by last vertex, ascending ids within a group.
class OrderedHypergraph {
public:
    /// Validates the edges and throws olp::error on any violation.
    OrderedHypergraph(std::uint32_t n, std::uint32_t r, std::vector<Edge> edges);

    /// Skips validation. Vertices must already lie in [1..n] or behavior
    /// is undefined; meant for trusted callers and for injecting benign
    /// violations (duplicates, unsorted tuples) in validator tests.
    static OrderedHypergraph unchecked(std::uint32_t n, std::uint32_t r,
                                       std::vector<Edge> edges);

    /// Trusted fast path for samplers: flat vertex array of already
    /// lex-sorted distinct edges, r entries per edge.
    static OrderedHypergraph from_sorted_flat(std::uint32_t n, std::uint32_t r,
                                              std::vector<std::uint32_t> flat);

    std::uint32_t vertex_count() const { return n_; }
    std::uint32_t uniformity() const { return r_; }
    std::size_t edge_count() const { return flat_.size() / r_; }

    std::span<const std::uint32_t> edge(std::size_t id) const {
        return {flat_.data() + id * r_, r_};
    }
    std::uint32_t first(std::size_t id) const { return flat_[id * r_]; }
    std::uint32_t last(std::size_t id) const { return flat_[id * r_ + r_ - 1]; }
    std::uint32_t length(std::size_t id) const { return last(id) - first(id); }
    Edge edge_copy(std::size_t id) const;

    /// Ids of edges with first(e) == v as a contiguous range [begin, end).
    std::pair<std::uint32_t, std::uint32_t> edges_first_at(std::uint32_t v) const {
        return {first_offset_[v], first_offset_[v + 1]};
    }

    /// Ids of edges with last(e) == v, ascending.
    std::span<const std::uint32_t> edges_last_at(std::uint32_t v) const {
        return {by_last_.data() + last_offset_[v],
                last_offset_[v + 1] - last_offset_[v]};
    }

    std::vector<Edge> edge_list() const;

private:
    OrderedHypergraph() = default;
    void build_indexes();

    std::uint32_t n_ = 0;
    std::uint32_t r_ = 2;
    std::vector<std::uint32_t> flat_;          // edge_count * r, lex sorted
    std::vector<std::uint32_t> first_offset_;  // n + 2 entries
    std::vector<std::uint32_t> last_offset_;   // n + 2 entries
    std::vector<std::uint32_t> by_last_;       // edge ids sorted by last vertex
};

/// Re-checks all type invariants of a constructed hypergraph, including
/// that the endpoint indexes partition the edge set exactly. Returns the
/// first violation found; never throws.
ValidationReport validate(const OrderedHypergraph& h);

/// The sub-hypergraph of unit-length edges only: entry j (0-based) is true
/// iff the consecutive block {j+1, ..., j+r} is an edge. Always n-r+1 entries.
struct UnitEdgeMask {
    std::uint32_t n = 0;
    std::uint32_t r = 2;
    std::vector<std::uint8_t> present; // n - r + 1 entries

    std::size_t positions() const { return present.size(); }
};

/// Plain edge-list format: header "n r", then one edge per line as
/// space-separated ascending labels.
void write_edge_list(std::ostream& out, const OrderedHypergraph& h);
void write_edge_list_file(const std::string& path, const OrderedHypergraph& h);

/// Parses and validates; throws olp::error with the violation message.
OrderedHypergraph read_edge_list(std::istream& in);
OrderedHypergraph read_edge_list_file(const std::string& path);

} // namespace olp

#endif
