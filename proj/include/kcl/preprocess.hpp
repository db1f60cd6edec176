#ifndef KCL_PREPROCESS_HPP
#define KCL_PREPROCESS_HPP

#include "kcl/graph.hpp"
#include "kcl/sink.hpp"

namespace kcl {

struct ReductionReport {
    uint64_t removed_vertices = 0;
    uint64_t removed_components = 0;
    uint64_t precounted_cliques = 0;  // sum of C(n_c, k) over removed clique components
    bool saturated = false;
    bool emitted = false;

    void merge(const ReductionReport& other) {
        removed_vertices += other.removed_vertices;
        removed_components += other.removed_components;
        uint64_t before = precounted_cliques;
        precounted_cliques += other.precounted_cliques;
        saturated = saturated || other.saturated || precounted_cliques < before;
        emitted = emitted || other.emitted;
    }
};

/// C(n, k) with overflow detection; returns false on 64-bit overflow.
bool binomial(uint64_t n, uint64_t k, uint64_t& out);

/// Iterated removal of vertices with degree < k-1 (queue-based cascade).
/// The result is the union of the (k-1)-cores of g. O(n+m).
std::pair<Graph, ReductionReport> pre_core(const Graph& g, uint32_t k);

/// BFS over connected components; any component that is a complete graph
/// (and has at least k vertices) gets its C(n_c,k) k-cliques reported to
/// the sink and is deleted. Intended to run after pre_core. O(n+m).
std::pair<Graph, ReductionReport> pre_list(const Graph& g, uint32_t k,
                                           CliqueSink& sink);

}  // namespace kcl

#endif  // KCL_PREPROCESS_HPP
