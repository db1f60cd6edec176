#include "kcl/graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kcl {

Graph Graph::from_edges(uint32_t n,
                        std::vector<std::pair<uint32_t, uint32_t>> edges,
                        std::vector<uint32_t> labels) {
    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    if (!g.labels_.empty() && g.labels_.size() != n)
        throw std::invalid_argument("label vector size mismatch");

    for (auto& e : edges) {
        if (e.first >= n || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    g.m_ = edges.size();
    std::vector<uint32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * g.m_);
    std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Per-vertex lists are sorted already: edges were emitted in ascending
    // (u,v) order, so each vertex receives neighbors in ascending order.
    return g;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::span<const uint32_t> keep) const {
    std::vector<uint32_t> newid(n_, UINT32_MAX);
    std::vector<uint32_t> labels;
    labels.reserve(keep.size());
    for (uint32_t i = 0; i < keep.size(); ++i) {
        newid[keep[i]] = i;
        labels.push_back(label(keep[i]));
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v : keep) {
        for (uint32_t w : neighbors(v)) {
            if (w > v && newid[w] != UINT32_MAX)
                edges.emplace_back(newid[v], newid[w]);
        }
    }
    return from_edges(static_cast<uint32_t>(keep.size()), std::move(edges),
                      std::move(labels));
}

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::unordered_map<uint64_t, uint32_t> compact;
    std::vector<uint32_t> labels;
    auto intern = [&](uint64_t raw) {
        auto [it, fresh] = compact.try_emplace(raw, static_cast<uint32_t>(labels.size()));
        if (fresh) labels.push_back(static_cast<uint32_t>(raw));
        return it->second;
    };

    std::string line;
    uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#' || line[pos] == '%') continue;
        std::istringstream ls(line);
        uint64_t a, b;
        if (!(ls >> a >> b))
            throw ParseError("malformed edge at line " + std::to_string(lineno), lineno);
        std::string rest;
        if (ls >> rest && !rest.empty() && rest[0] != '#' && rest[0] != '%')
            throw ParseError("trailing token at line " + std::to_string(lineno), lineno);
        if (a > UINT32_MAX || b > UINT32_MAX)
            throw ParseError("vertex id exceeds 32 bits at line " + std::to_string(lineno), lineno);
        uint32_t ua = intern(a);  // sequenced: a claims its id first
        uint32_t ub = intern(b);
        edges.emplace_back(ua, ub);
    }
    const uint32_t n = static_cast<uint32_t>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        for (uint32_t w : g.neighbors(v))
            if (w > v) out << g.label(v) << ' ' << g.label(w) << '\n';
}

namespace {
template <typename T>
void put_le(std::ostream& out, T v) {
    unsigned char buf[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}
template <typename T>
T get_le(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
}
constexpr char kMagic[5] = {'K', 'C', 'L', 'G', '1'};
}  // namespace

void save_binary(const Graph& g, std::ostream& out) {
    out.write(kMagic, 5);
    put_le<uint32_t>(out, g.num_vertices());
    put_le<uint64_t>(out, g.num_edges());
    for (uint64_t o : g.offsets()) put_le<uint64_t>(out, o);
    for (uint32_t w : g.adjacency()) put_le<uint32_t>(out, w);
}

Graph load_binary(std::istream& in) {
    char magic[5];
    in.read(magic, 5);
    if (!in || std::memcmp(magic, kMagic, 5) != 0)
        throw std::runtime_error("bad graph cache magic");
    uint32_t n = get_le<uint32_t>(in);
    uint64_t m = get_le<uint64_t>(in);
    std::vector<uint64_t> offsets(n + 1);
    for (auto& o : offsets) o = get_le<uint64_t>(in);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(m);
    std::vector<uint32_t> adj(2 * m);
    for (auto& w : adj) w = get_le<uint32_t>(in);
    if (!in) throw std::runtime_error("truncated graph cache");
    for (uint32_t v = 0; v < n; ++v)
        for (uint64_t i = offsets[v]; i < offsets[v + 1]; ++i)
            if (adj[i] > v) edges.emplace_back(v, adj[i]);
    return Graph::from_edges(n, std::move(edges));
}

Dag orient(const Graph& g, const VertexOrdering& order) {
    if (order.size() != g.num_vertices())
        throw std::invalid_argument("ordering size mismatch");
    Dag d;
    d.base = &g;
    d.order = order;
    const uint32_t n = g.num_vertices();
    d.out_offsets.assign(n + 1, 0);
    for (uint32_t r = 0; r < n; ++r) {
        uint32_t v = order.inverse[r];
        uint32_t outd = 0;
        for (uint32_t w : g.neighbors(v))
            if (order.rank[w] > r) ++outd;
        d.out_offsets[r + 1] = d.out_offsets[r] + outd;
        d.max_out_degree = std::max(d.max_out_degree, outd);
    }
    d.out_neighbors.resize(d.out_offsets[n]);
    for (uint32_t r = 0; r < n; ++r) {
        uint32_t v = order.inverse[r];
        uint64_t pos = d.out_offsets[r];
        for (uint32_t w : g.neighbors(v))
            if (order.rank[w] > r) d.out_neighbors[pos++] = order.rank[w];
        std::sort(d.out_neighbors.begin() + d.out_offsets[r],
                  d.out_neighbors.begin() + pos);
    }
    return d;
}

namespace detail {

std::pair<std::vector<uint32_t>, uint32_t> peel_min_degree(const Graph& g) {
    const uint32_t n = g.num_vertices();
    std::vector<uint32_t> deg(n), order;
    order.reserve(n);
    uint32_t maxdeg = 0;
    for (uint32_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    // bucket queue keyed by residual degree
    std::vector<uint32_t> bucket_start(maxdeg + 2, 0);
    for (uint32_t v = 0; v < n; ++v) ++bucket_start[deg[v] + 1];
    for (uint32_t d = 0; d <= maxdeg; ++d) bucket_start[d + 1] += bucket_start[d];
    std::vector<uint32_t> vert(n), pos(n);
    {
        std::vector<uint32_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (uint32_t v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }
    std::vector<bool> removed(n, false);
    uint32_t beta = 0;
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t v = vert[i];
        beta = std::max(beta, deg[v]);
        order.push_back(v);
        removed[v] = true;
        for (uint32_t w : g.neighbors(v)) {
            if (removed[w] || deg[w] <= deg[v]) continue;
            // swap w to the front of its bucket, then shrink its degree
            uint32_t dw = deg[w];
            uint32_t head = bucket_start[dw];
            uint32_t u = vert[head];
            if (u != w) {
                std::swap(vert[head], vert[pos[w]]);
                std::swap(pos[u], pos[w]);
            }
            ++bucket_start[dw];
            --deg[w];
        }
    }
    return {std::move(order), beta};
}

}  // namespace detail

GraphStats stats(const Graph& g, const Dag* dag) {
    GraphStats s;
    const uint32_t n = g.num_vertices();
    uint32_t maxdeg = 0;
    for (uint32_t v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    s.degree_histogram.assign(maxdeg + 1, 0);
    for (uint32_t v = 0; v < n; ++v) ++s.degree_histogram[g.degree(v)];

    // gamma: largest h with at least h vertices of degree >= h
    uint64_t at_least = 0;
    for (uint32_t h = maxdeg; h > 0; --h) {
        at_least += s.degree_histogram[h];
        if (at_least >= h) {
            s.h_index = h;
            break;
        }
    }
    s.degeneracy = detail::peel_min_degree(g).second;
    if (dag) s.max_out_degree = dag->max_out_degree;
    return s;
}

}  // namespace kcl
