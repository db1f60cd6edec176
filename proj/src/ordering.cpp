#include "kcl/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace kcl {

namespace {

VertexOrdering from_inverse(std::vector<uint32_t> inverse) {
    VertexOrdering ord;
    ord.rank.resize(inverse.size());
    for (uint32_t i = 0; i < inverse.size(); ++i) ord.rank[inverse[i]] = i;
    ord.inverse = std::move(inverse);
    return ord;
}

}  // namespace

VertexOrdering degree_ordering(const Graph& g) {
    std::vector<uint32_t> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        uint32_t da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    return from_inverse(std::move(order));
}

VertexOrdering inverse_degree_ordering(const Graph& g) {
    std::vector<uint32_t> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        uint32_t da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    return from_inverse(std::move(order));
}

std::pair<VertexOrdering, uint32_t> degeneracy_ordering(const Graph& g) {
    auto [order, beta] = detail::peel_min_degree(g);
    return {from_inverse(std::move(order)), beta};
}

ColorAssignment greedy_coloring(const Graph& g, const VertexOrdering& visit_order) {
    const uint32_t n = g.num_vertices();
    if (visit_order.size() != n)
        throw std::invalid_argument("visit order size mismatch");
    ColorAssignment ca;
    ca.color.assign(n, 0);
    std::vector<uint32_t> used(n + 2, UINT32_MAX);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t v = visit_order.inverse[i];
        for (uint32_t w : g.neighbors(v))
            if (ca.color[w] != 0) used[ca.color[w]] = v;
        uint32_t c = 1;
        while (used[c] == v) ++c;
        ca.color[v] = c;
        ca.num_colors = std::max(ca.num_colors, c);
    }
    return ca;
}

ColorAssignment greedy_coloring(const Graph& g) {
    return greedy_coloring(g, inverse_degree_ordering(g));
}

std::pair<VertexOrdering, ColorAssignment> color_ordering(const Graph& g) {
    ColorAssignment ca = greedy_coloring(g);
    std::vector<uint32_t> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return ca.color[a] != ca.color[b] ? ca.color[a] > ca.color[b] : a < b;
    });
    return {from_inverse(std::move(order)), std::move(ca)};
}

VertexOrdering make_ordering(const Graph& g, OrderingKind kind) {
    switch (kind) {
        case OrderingKind::Degree: return degree_ordering(g);
        case OrderingKind::Degeneracy: return degeneracy_ordering(g).first;
        case OrderingKind::Color: return color_ordering(g).first;
    }
    throw std::invalid_argument("unknown ordering kind");
}

}  // namespace kcl
