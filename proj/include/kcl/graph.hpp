#ifndef KCL_GRAPH_HPP
#define KCL_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kcl {

/// Bijection between vertex ids and positions 0..n-1.
struct VertexOrdering {
    std::vector<uint32_t> rank;     // vertex id -> position
    std::vector<uint32_t> inverse;  // position -> vertex id

    uint32_t size() const { return static_cast<uint32_t>(rank.size()); }
};

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists are sorted ascending with no duplicates and no self-loops.
/// Each vertex carries an original label (the id it had in the input file);
/// induced subgraphs propagate labels so cliques can always be reported in
/// terms of the input ids.
class Graph {
public:
    Graph() = default;

    // Edges may contain duplicates, reversed duplicates, and self-loops;
    // they are collapsed/dropped. labels empty means identity.
    static Graph from_edges(uint32_t n,
                            std::vector<std::pair<uint32_t, uint32_t>> edges,
                            std::vector<uint32_t> labels = {});

    uint32_t num_vertices() const { return n_; }
    uint64_t num_edges() const { return m_; }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    uint32_t degree(uint32_t v) const {
        return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    uint32_t label(uint32_t v) const {
        return labels_.empty() ? v : labels_[v];
    }
    bool has_edge(uint32_t u, uint32_t v) const;

    const std::vector<uint64_t>& offsets() const { return offsets_; }
    const std::vector<uint32_t>& adjacency() const { return adj_; }

    /// Subgraph induced by `keep` (sorted ascending vertex ids). Kept
    /// vertices are compacted to 0..|keep|-1; labels carry over.
    Graph induced(std::span<const uint32_t> keep) const;

    bool same_structure(const Graph& other) const {
        return n_ == other.n_ && m_ == other.m_ && offsets_ == other.offsets_ &&
               adj_ == other.adj_;
    }

private:
    uint32_t n_ = 0;
    uint64_t m_ = 0;
    std::vector<uint64_t> offsets_;  // n+1 entries
    std::vector<uint32_t> adj_;      // 2m entries
    std::vector<uint32_t> labels_;   // empty = identity
};

/// Orientation of a Graph under a total vertex order.
///
/// Vertices are relabeled so that id == rank: out(r) returns positions of
/// higher-ranked neighbors, sorted ascending (ascending relabeled id is
/// ascending rank). inverse maps back to base-graph ids.
struct Dag {
    const Graph* base = nullptr;
    VertexOrdering order;
    std::vector<uint64_t> out_offsets;
    std::vector<uint32_t> out_neighbors;  // relabeled ids
    uint32_t max_out_degree = 0;

    uint32_t num_vertices() const { return order.size(); }
    uint64_t num_arcs() const { return out_neighbors.size(); }
    std::span<const uint32_t> out(uint32_t r) const {
        return {out_neighbors.data() + out_offsets[r],
                out_neighbors.data() + out_offsets[r + 1]};
    }
    uint32_t out_degree(uint32_t r) const {
        return static_cast<uint32_t>(out_offsets[r + 1] - out_offsets[r]);
    }
    uint32_t to_base(uint32_t r) const { return order.inverse[r]; }
    uint32_t label_of(uint32_t r) const { return base->label(order.inverse[r]); }
};

struct GraphStats {
    uint32_t degeneracy = 0;  // beta
    uint32_t h_index = 0;     // gamma
    uint32_t max_out_degree = 0;  // Delta of the supplied Dag, 0 if none
    std::vector<uint64_t> degree_histogram;
};

struct ParseError : std::exception {
    std::string message;
    uint64_t line;
    explicit ParseError(std::string msg, uint64_t ln)
        : message(std::move(msg)), line(ln) {}
    const char* what() const noexcept override { return message.c_str(); }
};

/// Parse whitespace-separated integer pairs, one edge per line.
/// '#'/'%' lines are comments. Vertex ids are compacted to 0..n-1 in
/// first-appearance order; the original ids become labels.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// One edge per line "label(u) label(v)", u < v, in ascending vertex order.
void write_edge_list(const Graph& g, std::ostream& out);

/// Binary cache: magic "KCLG1", little-endian u32 n, u64 m,
/// u64 offsets[n+1], u32 neighbors[2m]. Labels are not stored; a reloaded
/// graph has identity labels.
void save_binary(const Graph& g, std::ostream& out);
Graph load_binary(std::istream& in);

Dag orient(const Graph& g, const VertexOrdering& order);

GraphStats stats(const Graph& g, const Dag* dag = nullptr);

namespace detail {
// Min-degree peeling with bucket queues: returns (removal order, max
// residual degree at removal time) in O(n+m).
std::pair<std::vector<uint32_t>, uint32_t> peel_min_degree(const Graph& g);
}  // namespace detail

}  // namespace kcl

#endif  // KCL_GRAPH_HPP
