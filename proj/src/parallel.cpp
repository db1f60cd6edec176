#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kcl/parallel.hpp"

namespace kcl {

namespace detail {
bool trivial_k(const Graph& g, uint32_t k, CliqueSink& sink);
}

namespace {

struct WorkQueue {
    std::atomic<uint64_t> next{0};
    uint64_t total = 0;
    uint64_t chunk = 1;

    // [first, last) or empty when drained
    std::pair<uint64_t, uint64_t> claim() {
        uint64_t first = next.fetch_add(chunk, std::memory_order_relaxed);
        if (first >= total) return {total, total};
        return {first, std::min(first + chunk, total)};
    }
};

bool past_deadline(const ParallelPlan& plan) {
    return plan.deadline && std::chrono::steady_clock::now() > *plan.deadline;
}

}  // namespace

ParallelResult run_parallel(EngineKind kind, const Graph& g, uint32_t k,
                            CliqueSink& sink, const EngineOptions& opts,
                            const ParallelPlan& plan,
                            OrderingKind kclist_ordering) {
    if (plan.workers == 0) throw std::invalid_argument("workers must be >= 1");
    if (plan.strategy == Strategy::Edge && k < 3)
        throw std::invalid_argument("edge strategy requires k >= 3");

    ParallelResult res;
    if (detail::trivial_k(g, k, sink)) return res;

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
    const uint32_t roots = engine->num_roots();

    if (plan.strategy == Strategy::Serial || plan.workers == 1) {
        auto worker = engine->make_worker();
        if (plan.strategy == Strategy::Edge) {
            for (uint32_t u = 0; u < roots && !res.timed_out; ++u) {
                for (uint32_t v : engine->root_arcs(u)) worker->run_arc(u, v, sink);
                if (past_deadline(plan)) res.timed_out = true;
            }
        } else {
            for (uint32_t u = 0; u < roots && !res.timed_out; ++u) {
                worker->run_root(u, sink);
                if (past_deadline(plan)) res.timed_out = true;
            }
        }
        res.peak_scratch_ids = worker->peak_scratch_ids();
        res.peak_scratch_words = worker->peak_scratch_words();
        return res;
    }

    WorkQueue queue;
    std::vector<uint64_t> arc_prefix;
    if (plan.strategy == Strategy::Node) {
        queue.total = roots;
        queue.chunk = std::max<uint32_t>(plan.node_chunk, 1);
    } else {
        arc_prefix.resize(roots + 1, 0);
        for (uint32_t u = 0; u < roots; ++u)
            arc_prefix[u + 1] = arc_prefix[u] + engine->root_arcs(u).size();
        queue.total = arc_prefix[roots];
        queue.chunk = std::max<uint32_t>(plan.edge_chunk, 1);
    }

    std::mutex emit_mu;
    std::atomic<bool> timed_out{false};
    std::vector<CliqueSink> sinks;
    sinks.reserve(plan.workers);
    for (uint32_t w = 0; w < plan.workers; ++w) {
        if (sink.mode() == CliqueSink::Mode::Emit) {
            sinks.emplace_back(CliqueSink([&](std::span<const uint32_t> c) {
                std::lock_guard lock(emit_mu);
                sink.emit_fn()(c);
            }));
        } else {
            sinks.emplace_back();
        }
    }

    std::vector<uint64_t> peak_ids(plan.workers, 0), peak_words(plan.workers, 0);
    auto body = [&](uint32_t wid) {
        auto worker = engine->make_worker();
        CliqueSink& my = sinks[wid];
        while (true) {
            if (past_deadline(plan)) {
                timed_out.store(true, std::memory_order_relaxed);
                break;
            }
            auto [first, last] = queue.claim();
            if (first >= last) break;
            if (plan.strategy == Strategy::Node) {
                for (uint64_t u = first; u < last; ++u)
                    worker->run_root(static_cast<uint32_t>(u), my);
            } else {
                // map consecutive arc ids back to (u, v)
                uint32_t u = static_cast<uint32_t>(
                    std::upper_bound(arc_prefix.begin(), arc_prefix.end(), first) -
                    arc_prefix.begin() - 1);
                for (uint64_t a = first; a < last; ++a) {
                    while (arc_prefix[u + 1] <= a) ++u;
                    uint32_t v = engine->root_arcs(u)[a - arc_prefix[u]];
                    worker->run_arc(u, v, my);
                }
            }
        }
        peak_ids[wid] = worker->peak_scratch_ids();
        peak_words[wid] = worker->peak_scratch_words();
    };

    std::vector<std::thread> threads;
    threads.reserve(plan.workers);
    for (uint32_t w = 0; w < plan.workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();

    for (uint32_t w = 0; w < plan.workers; ++w) {
        sink.merge(sinks[w]);
        res.peak_scratch_ids = std::max(res.peak_scratch_ids, peak_ids[w]);
        res.peak_scratch_words = std::max(res.peak_scratch_words, peak_words[w]);
    }
    res.timed_out = timed_out.load();
    return res;
}

}  // namespace kcl
