#include <stdexcept>

#include "kcl/listing.hpp"

namespace kcl {

std::unique_ptr<RootEngine> detail_make_sdegree(const Graph& g, uint32_t k,
                                                const EngineOptions& opts);
std::unique_ptr<RootEngine> detail_make_bitcol(const Graph& g, uint32_t k,
                                               const EngineOptions& opts);
std::unique_ptr<RootEngine> detail_make_kclist(const Graph& g, uint32_t k,
                                               OrderingKind ord);

std::unique_ptr<RootEngine> make_engine(EngineKind kind, const Graph& g,
                                        uint32_t k, const EngineOptions& opts,
                                        OrderingKind kclist_ordering) {
    if (k < 3) throw std::invalid_argument("engines require k >= 3");
    switch (kind) {
        case EngineKind::SDegree: return detail_make_sdegree(g, k, opts);
        case EngineKind::BitCol: return detail_make_bitcol(g, k, opts);
        case EngineKind::KClist: return detail_make_kclist(g, k, kclist_ordering);
    }
    throw std::invalid_argument("unknown engine kind");
}

namespace detail {

// k=1 and k=2 never reach an engine: vertices and edges are read off the
// graph directly.
bool trivial_k(const Graph& g, uint32_t k, CliqueSink& sink) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    if (k == 1) {
        if (sink.mode() == CliqueSink::Mode::Count) {
            sink.add(g.num_vertices());
        } else {
            for (uint32_t v = 0; v < g.num_vertices(); ++v) {
                uint32_t lab = g.label(v);
                sink.emit({&lab, 1});
            }
        }
        return true;
    }
    if (k == 2) {
        if (sink.mode() == CliqueSink::Mode::Count) {
            sink.add(g.num_edges());
        } else {
            uint32_t pair[2];
            for (uint32_t v = 0; v < g.num_vertices(); ++v)
                for (uint32_t w : g.neighbors(v)) {
                    if (w <= v) continue;
                    pair[0] = g.label(v);
                    pair[1] = g.label(w);
                    if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
                    sink.emit(pair);
                }
        }
        return true;
    }
    return false;
}

// Shared serial pipeline: optional reductions, then the root loop.
ListingResult run_serial(EngineKind kind, const Graph& g, uint32_t k,
                         CliqueSink& sink, const EngineOptions& opts,
                         OrderingKind kclist_ordering) {
    ListingResult res;
    if (trivial_k(g, k, sink)) return res;

    const Graph* cur = &g;
    Graph reduced;
    if (opts.use_precore) {
        auto [h, rep] = pre_core(*cur, k);
        res.reduction.merge(rep);
        reduced = std::move(h);
        cur = &reduced;
    }
    if (opts.use_prelist) {
        auto [h, rep] = pre_list(*cur, k, sink);
        res.reduction.merge(rep);
        reduced = std::move(h);
        cur = &reduced;
    }
    if (cur->num_vertices() == 0) return res;

    auto engine = make_engine(kind, *cur, k, opts, kclist_ordering);
    auto worker = engine->make_worker();
    for (uint32_t u = 0; u < engine->num_roots(); ++u) worker->run_root(u, sink);
    res.peak_scratch_ids = worker->peak_scratch_ids();
    res.peak_scratch_words = worker->peak_scratch_words();
    return res;
}

}  // namespace detail

ListingResult sdegree(const Graph& g, uint32_t k, CliqueSink& sink,
                      const EngineOptions& opts) {
    return detail::run_serial(EngineKind::SDegree, g, k, sink, opts,
                              OrderingKind::Degeneracy);
}

ListingResult bitcol(const Graph& g, uint32_t k, CliqueSink& sink,
                     const EngineOptions& opts) {
    return detail::run_serial(EngineKind::BitCol, g, k, sink, opts,
                              OrderingKind::Degeneracy);
}

ListingResult kclist(const Graph& g, uint32_t k, OrderingKind ordering,
                     CliqueSink& sink, const EngineOptions& opts) {
    return detail::run_serial(EngineKind::KClist, g, k, sink, opts, ordering);
}

}  // namespace kcl
