#include <chrono>
#include <sstream>

#include "json.hpp"
#include "kcl/bench.hpp"

namespace kcl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const char* engine_name(const RunConfig& cfg) {
    if (cfg.use_chiba) return "chiba";
    switch (cfg.algo) {
        case EngineKind::SDegree: return "sdegree";
        case EngineKind::BitCol: return "bitcol";
        case EngineKind::KClist: return "kclist";
    }
    return "?";
}

const char* ordering_name(const RunConfig& cfg) {
    if (cfg.use_chiba) return "none";
    switch (cfg.algo) {
        case EngineKind::SDegree: return "degree";
        case EngineKind::BitCol: return "degeneracy";
        case EngineKind::KClist: break;
    }
    switch (cfg.kclist_ordering) {
        case OrderingKind::Degree: return "degree";
        case OrderingKind::Degeneracy: return "degeneracy";
        case OrderingKind::Color: return "color";
    }
    return "?";
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Serial: return "serial";
        case Strategy::Node: return "node";
        case Strategy::Edge: return "edge";
    }
    return "?";
}

OrderingKind engine_ordering(const RunConfig& cfg) {
    switch (cfg.algo) {
        case EngineKind::SDegree: return OrderingKind::Degree;
        case EngineKind::BitCol: return OrderingKind::Degeneracy;
        case EngineKind::KClist: return cfg.kclist_ordering;
    }
    return OrderingKind::Degeneracy;
}

}  // namespace

RunReport run_benchmark(const Graph& g, const std::string& dataset,
                        const RunConfig& cfg, CliqueSink& sink) {
    RunReport rep;
    rep.dataset = dataset;
    rep.k = cfg.k;
    rep.algo = engine_name(cfg);
    rep.ordering = ordering_name(cfg);
    rep.strategy = cfg.use_chiba ? "serial" : strategy_name(cfg.strategy);
    rep.workers = cfg.use_chiba ? 1 : cfg.workers;
    rep.precore = !cfg.use_chiba && cfg.opts.use_precore;
    rep.prelist = !cfg.use_chiba && cfg.opts.use_prelist;

    // reductions run here so their time is attributed separately; the
    // listing call below then runs with them disabled
    const Graph* cur = &g;
    Graph reduced;
    ReductionReport reduction;
    auto t0 = Clock::now();
    if (!cfg.use_chiba && cfg.k >= 3) {
        if (cfg.opts.use_precore) {
            auto [h, r] = pre_core(*cur, cfg.k);
            reduction.merge(r);
            reduced = std::move(h);
            cur = &reduced;
        }
        if (cfg.opts.use_prelist) {
            auto [h, r] = pre_list(*cur, cfg.k, sink);
            reduction.merge(r);
            reduced = std::move(h);
            cur = &reduced;
        }
    }
    rep.preprocess_ms = ms_since(t0);

    t0 = Clock::now();
    GraphStats st;
    if (cur->num_vertices() > 0) {
        Dag dag = orient(*cur, make_ordering(*cur, engine_ordering(cfg)));
        st = stats(*cur, &dag);
    }
    rep.order_ms = ms_since(t0);
    rep.n = cur->num_vertices();
    rep.m = cur->num_edges();
    rep.degeneracy = st.degeneracy;
    rep.h_index = st.h_index;
    rep.max_out_degree = st.max_out_degree;

    t0 = Clock::now();
    if (cfg.use_chiba) {
        chiba_nishizeki(*cur, cfg.k, sink);
    } else if (cur->num_vertices() > 0 || cfg.k < 3) {
        EngineOptions opts = cfg.opts;
        opts.use_precore = false;
        opts.use_prelist = false;
        ParallelPlan plan;
        plan.strategy = cfg.strategy;
        plan.workers = std::max<uint32_t>(cfg.workers, 1);
        if (cfg.time_limit_s)
            plan.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                               std::chrono::duration<double>(*cfg.time_limit_s));
        ParallelResult pr = run_parallel(cfg.algo, *cur, cfg.k, sink, opts, plan,
                                         cfg.kclist_ordering);
        rep.peak_scratch_ids = pr.peak_scratch_ids;
        rep.peak_scratch_words = pr.peak_scratch_words;
        rep.timed_out = pr.timed_out;
    }
    rep.list_ms = ms_since(t0);

    rep.count = sink.count();
    rep.saturated = sink.saturated() || reduction.saturated;
    rep.removed_vertices = reduction.removed_vertices;
    rep.removed_components = reduction.removed_components;
    return rep;
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["dataset"] = dataset;
    j["k"] = k;
    j["algo"] = algo;
    j["ordering"] = ordering;
    j["strategy"] = strategy;
    j["workers"] = workers;
    j["precore"] = precore;
    j["prelist"] = prelist;
    j["count"] = count;
    j["saturated"] = saturated;
    j["timings_ms"] = {{"load", load_ms},
                       {"preprocess", preprocess_ms},
                       {"order", order_ms},
                       {"list", list_ms}};
    j["peak_scratch"] = {{"ids", peak_scratch_ids}, {"words", peak_scratch_words}};
    j["reduction"] = {{"removed_vertices", removed_vertices},
                      {"removed_components", removed_components}};
    j["graph"] = {{"n", n},
                  {"m", m},
                  {"degeneracy", degeneracy},
                  {"h_index", h_index},
                  {"max_out_degree", max_out_degree}};
    j["timed_out"] = timed_out;
    return j.dump(2);
}

std::string RunReport::to_table() const {
    std::ostringstream os;
    os << "dataset      " << dataset << "\n"
       << "k            " << k << "\n"
       << "algo         " << algo << " (ordering=" << ordering
       << ", strategy=" << strategy << ", workers=" << workers << ")\n"
       << "preprocess   precore=" << (precore ? "on" : "off")
       << " prelist=" << (prelist ? "on" : "off")
       << " removed=" << removed_vertices
       << " components=" << removed_components << "\n"
       << "graph        n=" << n << " m=" << m << " beta=" << degeneracy
       << " gamma=" << h_index << " delta=" << max_out_degree << "\n"
       << "count        " << count << (saturated ? " (saturated)" : "") << "\n"
       << "time_ms      load=" << load_ms << " preprocess=" << preprocess_ms
       << " order=" << order_ms << " list=" << list_ms << "\n"
       << "scratch      ids=" << peak_scratch_ids
       << " words=" << peak_scratch_words << "\n";
    if (timed_out) os << "status       TIMED OUT (partial count)\n";
    return os.str();
}

}  // namespace kcl
