#ifndef KCL_ORDERING_HPP
#define KCL_ORDERING_HPP

#include "kcl/graph.hpp"

namespace kcl {

/// Proper greedy coloring; colors are 1-based.
struct ColorAssignment {
    std::vector<uint32_t> color;  // vertex id -> color in 1..num_colors
    uint32_t num_colors = 0;
};

enum class OrderingKind { Degree, Degeneracy, Color };

/// Rank ascending by (degree, vertex id). Orienting with it gives
/// u->v iff d_u < d_v, ties by smaller id.
VertexOrdering degree_ordering(const Graph& g);

/// Descending degree, ties by ascending id. Default visit order for the
/// greedy coloring.
VertexOrdering inverse_degree_ordering(const Graph& g);

/// Min-degree peeling order; second member is the degeneracy beta.
std::pair<VertexOrdering, uint32_t> degeneracy_ordering(const Graph& g);

/// Visit vertices in visit_order, assign the minimum positive color absent
/// among already-colored neighbors.
ColorAssignment greedy_coloring(const Graph& g, const VertexOrdering& visit_order);
ColorAssignment greedy_coloring(const Graph& g);  // inverse degree order

/// Rank descending by color value, ties by ascending id. Orienting with it
/// gives u->v iff c_u > c_v (same-color vertices are never adjacent).
std::pair<VertexOrdering, ColorAssignment> color_ordering(const Graph& g);

VertexOrdering make_ordering(const Graph& g, OrderingKind kind);

}  // namespace kcl

#endif  // KCL_ORDERING_HPP
