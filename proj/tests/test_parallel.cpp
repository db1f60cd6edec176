#include "doctest.h"
#include "kcl/parallel.hpp"
#include "testkit.hpp"

using namespace kcl;
using namespace kcl::testkit;

namespace {

uint64_t parallel_count(EngineKind kind, const Graph& g, uint32_t k,
                        Strategy st, uint32_t workers,
                        const EngineOptions& opts = {}) {
    CliqueSink sink;
    ParallelPlan plan;
    plan.strategy = st;
    plan.workers = workers;
    run_parallel(kind, g, k, sink, opts, plan);
    return sink.count();
}

}  // namespace

TEST_CASE("node and edge strategies reproduce the serial count") {
    std::mt19937_64 seeds(31);
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = gen_gnp(30 + (iter % 4) * 10, 0.15 + 0.05 * (iter % 5), seeds());
        for (uint32_t k : {3u, 5u}) {
            uint64_t serial =
                parallel_count(EngineKind::SDegree, g, k, Strategy::Serial, 1);
            for (int rep = 0; rep < 3; ++rep) {
                for (uint32_t w : {1u, 2u, 4u, 8u}) {
                    CAPTURE(iter);
                    CAPTURE(k);
                    CAPTURE(w);
                    CHECK(parallel_count(EngineKind::SDegree, g, k,
                                         Strategy::Node, w) == serial);
                    CHECK(parallel_count(EngineKind::SDegree, g, k,
                                         Strategy::Edge, w) == serial);
                    CHECK(parallel_count(EngineKind::BitCol, g, k,
                                         Strategy::Node, w) == serial);
                    CHECK(parallel_count(EngineKind::BitCol, g, k,
                                         Strategy::Edge, w) == serial);
                    CHECK(parallel_count(EngineKind::KClist, g, k,
                                         Strategy::Edge, w) == serial);
                }
            }
        }
    }
}

TEST_CASE("K10 at k=5 gives 252 under the edge strategy for any worker count") {
    Graph g = gen_complete(10);
    EngineOptions opts;
    opts.use_prelist = false;  // keep the component for the engines
    for (uint32_t w : {1u, 2u, 4u, 8u})
        CHECK(parallel_count(EngineKind::SDegree, g, 5, Strategy::Edge, w, opts) ==
              252);
}

TEST_CASE("parallel emit produces each clique exactly once") {
    Graph g = gen_gnp(40, 0.3, 1234);
    CliqueSet serial = emit_driver(Driver::BitCol, g, 4);
    for (Strategy st : {Strategy::Node, Strategy::Edge}) {
        CliqueSet out;
        CliqueSink sink = collecting_sink(out);
        ParallelPlan plan;
        plan.strategy = st;
        plan.workers = 4;
        run_parallel(EngineKind::BitCol, g, 4, sink, {}, plan);
        CHECK(out == serial);
        CHECK(sink.count() == serial.size());
    }
}

TEST_CASE("invalid plans are rejected") {
    Graph g = gen_complete(5);
    CliqueSink sink;
    ParallelPlan plan;
    plan.workers = 0;
    CHECK_THROWS_AS(run_parallel(EngineKind::SDegree, g, 3, sink, {}, plan),
                    std::invalid_argument);
    plan.workers = 2;
    plan.strategy = Strategy::Edge;
    CHECK_THROWS_AS(run_parallel(EngineKind::SDegree, g, 2, sink, {}, plan),
                    std::invalid_argument);
}

TEST_CASE("per-unit counts partition the total") {
    // every root processed exactly once: summing per-root sink counts
    // over a manual worker equals the pipeline total
    Graph g = gen_gnp(25, 0.4, 99);
    EngineOptions opts;
    opts.use_precore = opts.use_prelist = false;
    auto engine = make_engine(EngineKind::SDegree, g, 4, opts);
    uint64_t total = 0;
    auto worker = engine->make_worker();
    for (uint32_t u = 0; u < engine->num_roots(); ++u) {
        CliqueSink per;
        worker->run_root(u, per);
        total += per.count();
    }
    CHECK(total == count_driver(Driver::SDegree, g, 4));

    uint64_t arc_total = 0;
    for (uint32_t u = 0; u < engine->num_roots(); ++u)
        for (uint32_t v : engine->root_arcs(u)) {
            CliqueSink per;
            worker->run_arc(u, v, per);
            arc_total += per.count();
        }
    CHECK(arc_total == total);
}

TEST_CASE("deadline in the past reports a timeout without corruption") {
    Graph g = gen_gnp(60, 0.3, 7);
    CliqueSink sink;
    ParallelPlan plan;
    plan.strategy = Strategy::Node;
    plan.workers = 2;
    plan.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    ParallelResult r = run_parallel(EngineKind::SDegree, g, 4, sink, {}, plan);
    CHECK(r.timed_out);
    CHECK(sink.count() <= count_driver(Driver::SDegree, g, 4));
}

TEST_CASE("workers own isolated scratch") {
    // peaks are reported per worker and bounded by the serial worker's peak
    Graph g = gen_gnp(50, 0.3, 12);
    CliqueSink s1;
    ListingResult serial = sdegree(g, 4, s1);
    CliqueSink s2;
    ParallelPlan plan;
    plan.strategy = Strategy::Node;
    plan.workers = 4;
    ParallelResult par = run_parallel(EngineKind::SDegree, g, 4, s2, {}, plan);
    CHECK(par.peak_scratch_ids > 0);
    CHECK(par.peak_scratch_ids <= serial.peak_scratch_ids);
}
