#include "olp/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "olp/errors.hpp"

namespace olp {

ValidationReport ValidationReport::bad(ViolationKind k, std::size_t idx,
                                       std::string msg) {
    ValidationReport rep;
    rep.ok = false;
    rep.kind = k;
    rep.edge_index = idx;
    rep.message = std::move(msg);
    return rep;
}

ValidationReport validate_edges(std::uint32_t n, std::uint32_t r,
                                std::span<const Edge> edges) {
    if (r < 2 || n < r) {
        return ValidationReport::bad(ViolationKind::bad_parameters, 0,
                                     "need r >= 2 and n >= r");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& vs = edges[i].vertices;
        if (vs.size() != r) {
            return ValidationReport::bad(ViolationKind::bad_uniformity, i,
                                         "edge " + std::to_string(i) + " has " +
                                             std::to_string(vs.size()) +
                                             " vertices, expected " +
                                             std::to_string(r));
        }
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (vs[j] < 1 || vs[j] > n) {
                return ValidationReport::bad(
                    ViolationKind::vertex_out_of_range, i,
                    "edge " + std::to_string(i) + " has vertex " +
                        std::to_string(vs[j]) + " outside [1.." +
                        std::to_string(n) + "]");
            }
            if (j > 0 && vs[j] <= vs[j - 1]) {
                return ValidationReport::bad(
                    ViolationKind::not_ascending, i,
                    "edge " + std::to_string(i) +
                        " is not strictly ascending");
            }
        }
    }
    // duplicates: sort a copy of the tuples
    std::vector<const Edge*> ptrs;
    ptrs.reserve(edges.size());
    for (const auto& e : edges) ptrs.push_back(&e);
    std::sort(ptrs.begin(), ptrs.end(),
              [](const Edge* a, const Edge* b) { return *a < *b; });
    for (std::size_t i = 1; i < ptrs.size(); ++i) {
        if (*ptrs[i] == *ptrs[i - 1]) {
            return ValidationReport::bad(
                ViolationKind::duplicate_edge,
                static_cast<std::size_t>(ptrs[i] - edges.data()),
                "duplicate edge");
        }
    }
    return ValidationReport::good();
}

OrderedHypergraph::OrderedHypergraph(std::uint32_t n, std::uint32_t r,
                                     std::vector<Edge> edges) {
    auto rep = validate_edges(n, r, edges);
    if (!rep.ok) throw error("invalid hypergraph: " + rep.message);
    *this = unchecked(n, r, std::move(edges));
}

OrderedHypergraph OrderedHypergraph::unchecked(std::uint32_t n, std::uint32_t r,
                                               std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    OrderedHypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.flat_.reserve(edges.size() * r);
    for (const auto& e : edges) {
        h.flat_.insert(h.flat_.end(), e.vertices.begin(), e.vertices.end());
    }
    h.build_indexes();
    return h;
}

OrderedHypergraph OrderedHypergraph::from_sorted_flat(
    std::uint32_t n, std::uint32_t r, std::vector<std::uint32_t> flat) {
    OrderedHypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.flat_ = std::move(flat);
    h.build_indexes();
    return h;
}

void OrderedHypergraph::build_indexes() {
    const std::size_t m = edge_count();
    first_offset_.assign(n_ + 2, 0);
    last_offset_.assign(n_ + 2, 0);
    for (std::size_t id = 0; id < m; ++id) {
        ++first_offset_[first(id) + 1];
        ++last_offset_[last(id) + 1];
    }
    for (std::uint32_t v = 1; v <= n_ + 1; ++v) {
        first_offset_[v] += first_offset_[v - 1];
        last_offset_[v] += last_offset_[v - 1];
    }
    // counting sort of edge ids by last vertex; ids ascending per bucket
    by_last_.assign(m, 0);
    std::vector<std::uint32_t> cursor(last_offset_.begin(), last_offset_.end());
    for (std::size_t id = 0; id < m; ++id) {
        by_last_[cursor[last(id)]++] = static_cast<std::uint32_t>(id);
    }
}

Edge OrderedHypergraph::edge_copy(std::size_t id) const {
    auto span = edge(id);
    return Edge{std::vector<std::uint32_t>(span.begin(), span.end())};
}

std::vector<Edge> OrderedHypergraph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t id = 0; id < edge_count(); ++id) out.push_back(edge_copy(id));
    return out;
}

ValidationReport validate(const OrderedHypergraph& h) {
    auto edges = h.edge_list();
    auto rep = validate_edges(h.vertex_count(), h.uniformity(), edges);
    if (!rep.ok) return rep;

    // endpoint indexes must partition the edge set exactly
    std::size_t seen_first = 0, seen_last = 0;
    for (std::uint32_t v = 1; v <= h.vertex_count(); ++v) {
        auto [b, e] = h.edges_first_at(v);
        for (std::uint32_t id = b; id < e; ++id) {
            if (h.first(id) != v) {
                return ValidationReport::bad(ViolationKind::index_mismatch, id,
                                             "first-index entry mismatch");
            }
            ++seen_first;
        }
        for (std::uint32_t id : h.edges_last_at(v)) {
            if (h.last(id) != v) {
                return ValidationReport::bad(ViolationKind::index_mismatch, id,
                                             "last-index entry mismatch");
            }
            ++seen_last;
        }
    }
    if (seen_first != h.edge_count() || seen_last != h.edge_count()) {
        return ValidationReport::bad(ViolationKind::index_mismatch, 0,
                                     "index does not cover the edge set");
    }
    return ValidationReport::good();
}

void write_edge_list(std::ostream& out, const OrderedHypergraph& h) {
    out << h.vertex_count() << ' ' << h.uniformity() << '\n';
    for (std::size_t id = 0; id < h.edge_count(); ++id) {
        auto e = h.edge(id);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out << ' ';
            out << e[j];
        }
        out << '\n';
    }
}

void write_edge_list_file(const std::string& path, const OrderedHypergraph& h) {
    std::ofstream out(path);
    if (!out) throw error("cannot open for writing: " + path);
    write_edge_list(out, h);
    if (!out) throw error("write failed: " + path);
}

OrderedHypergraph read_edge_list(std::istream& in) {
    std::uint32_t n = 0, r = 0;
    std::string header;
    if (!std::getline(in, header)) throw error("edge list: missing header");
    {
        std::istringstream hs(header);
        if (!(hs >> n >> r)) throw error("edge list: header must be 'n r'");
    }
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Edge e;
        std::uint32_t v;
        while (ls >> v) e.vertices.push_back(v);
        if (!ls.eof()) {
            throw error("edge list: bad token on line " + std::to_string(lineno));
        }
        edges.push_back(std::move(e));
    }
    auto rep = validate_edges(n, r, edges);
    if (!rep.ok) throw error("edge list: " + rep.message);
    return OrderedHypergraph::unchecked(n, r, std::move(edges));
}

OrderedHypergraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open: " + path);
    return read_edge_list(in);
}

} // namespace olp
