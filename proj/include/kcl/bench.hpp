#ifndef KCL_BENCH_HPP
#define KCL_BENCH_HPP

#include <string>

#include "kcl/parallel.hpp"

namespace kcl {

struct RunConfig {
    uint32_t k = 3;
    EngineKind algo = EngineKind::SDegree;
    bool use_chiba = false;  // baseline engine, serial only
    OrderingKind kclist_ordering = OrderingKind::Degeneracy;
    Strategy strategy = Strategy::Serial;
    uint32_t workers = 1;
    EngineOptions opts;
    std::optional<double> time_limit_s;
};

struct RunReport {
    std::string dataset;
    uint32_t k = 0;
    std::string algo;
    std::string ordering;
    std::string strategy;
    uint32_t workers = 1;
    bool precore = true;
    bool prelist = true;
    uint64_t count = 0;
    bool saturated = false;
    double load_ms = 0;
    double preprocess_ms = 0;
    double order_ms = 0;
    double list_ms = 0;
    uint64_t peak_scratch_ids = 0;
    uint64_t peak_scratch_words = 0;
    uint64_t removed_vertices = 0;
    uint64_t removed_components = 0;
    uint64_t n = 0;
    uint64_t m = 0;
    uint32_t degeneracy = 0;
    uint32_t h_index = 0;
    uint32_t max_out_degree = 0;
    bool timed_out = false;

    std::string to_json() const;
    std::string to_table() const;
};

/// Execute the configured pipeline on an already-loaded graph. Phase
/// timings cover preprocessing, ordering (graph stats), and listing;
/// loading is timed by the caller and recorded via report.load_ms.
RunReport run_benchmark(const Graph& g, const std::string& dataset,
                        const RunConfig& cfg, CliqueSink& sink);

}  // namespace kcl

#endif  // KCL_BENCH_HPP
