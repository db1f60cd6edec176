#include "kcl/preprocess.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kcl {

bool binomial(uint64_t n, uint64_t k, uint64_t& out) {
    if (k > n) {
        out = 0;
        return true;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at each step
        if (r > UINT64_MAX) return false;
    }
    out = static_cast<uint64_t>(r);
    return true;
}

std::pair<Graph, ReductionReport> pre_core(const Graph& g, uint32_t k) {
    if (k < 2) throw std::invalid_argument("pre_core requires k >= 2");
    const uint32_t n = g.num_vertices();
    const uint32_t threshold = k - 1;
    std::vector<uint32_t> deg(n);
    std::vector<bool> doomed(n, false);
    std::vector<uint32_t> queue;
    for (uint32_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < threshold) {
            doomed[v] = true;
            queue.push_back(v);
        }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        uint32_t u = queue[head];
        for (uint32_t v : g.neighbors(u)) {
            if (doomed[v]) continue;
            if (--deg[v] < threshold) {
                doomed[v] = true;
                queue.push_back(v);
            }
        }
    }
    ReductionReport rep;
    rep.removed_vertices = queue.size();
    std::vector<uint32_t> keep;
    keep.reserve(n - queue.size());
    for (uint32_t v = 0; v < n; ++v)
        if (!doomed[v]) keep.push_back(v);
    return {g.induced(keep), rep};
}

namespace {

// Enumerate all k-subsets of labels (ascending) into the sink.
void emit_combinations(std::span<const uint32_t> labels, uint32_t k,
                       CliqueSink& sink) {
    std::vector<uint32_t> pick(k);
    std::vector<uint32_t> idx(k);
    uint32_t depth = 0;
    idx[0] = 0;
    while (true) {
        if (idx[depth] > labels.size() - (k - depth)) {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
            continue;
        }
        pick[depth] = labels[idx[depth]];
        if (depth + 1 == k) {
            sink.emit(pick);
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
}

}  // namespace

std::pair<Graph, ReductionReport> pre_list(const Graph& g, uint32_t k,
                                           CliqueSink& sink) {
    if (k < 2) throw std::invalid_argument("pre_list requires k >= 2");
    const uint32_t n = g.num_vertices();
    ReductionReport rep;
    std::vector<bool> visited(n, false), removed(n, false);
    std::vector<uint32_t> component;
    for (uint32_t s = 0; s < n; ++s) {
        if (visited[s]) continue;
        component.clear();
        component.push_back(s);
        visited[s] = true;
        uint64_t arcs = 0;
        for (size_t head = 0; head < component.size(); ++head) {
            uint32_t v = component[head];
            arcs += g.degree(v);
            for (uint32_t w : g.neighbors(v)) {
                if (!visited[w]) {
                    visited[w] = true;
                    component.push_back(w);
                }
            }
        }
        const uint64_t nc = component.size();
        // stored arc count over the doubled adjacency; undirected m_c is half
        assert(arcs % 2 == 0);
        if (nc < k || arcs != nc * (nc - 1)) continue;

        uint64_t cnt = 0;
        bool exact = binomial(nc, k, cnt);
        if (sink.mode() == CliqueSink::Mode::Emit) {
            std::vector<uint32_t> labels(component.begin(), component.end());
            for (auto& v : labels) v = g.label(v);
            std::sort(labels.begin(), labels.end());
            emit_combinations(labels, k, sink);
            rep.emitted = true;
        } else if (exact) {
            sink.add(cnt);
        } else {
            sink.add_saturated();
        }
        uint64_t before = rep.precounted_cliques;
        rep.precounted_cliques += cnt;
        if (!exact || rep.precounted_cliques < before) rep.saturated = true;
        ++rep.removed_components;
        rep.removed_vertices += nc;
        for (uint32_t v : component) removed[v] = true;
    }
    if (rep.removed_components == 0) return {g, rep};
    std::vector<uint32_t> keep;
    keep.reserve(n - rep.removed_vertices);
    for (uint32_t v = 0; v < n; ++v)
        if (!removed[v]) keep.push_back(v);
    return {g.induced(keep), rep};
}

}  // namespace kcl
