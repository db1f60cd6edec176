#ifndef KCL_PARALLEL_HPP
#define KCL_PARALLEL_HPP

#include <chrono>
#include <optional>

#include "kcl/listing.hpp"

namespace kcl {

enum class Strategy { Serial, Node, Edge };

struct ParallelPlan {
    Strategy strategy = Strategy::Serial;
    uint32_t workers = 1;
    uint32_t node_chunk = 1;
    uint32_t edge_chunk = 64;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ParallelResult {
    ReductionReport reduction;
    uint64_t peak_scratch_ids = 0;    // max over workers
    uint64_t peak_scratch_words = 0;
    bool timed_out = false;
};

/// Full pipeline (reductions + listing) under the given plan. Node
/// parallelism hands out DAG roots; edge parallelism hands out DAG arcs
/// (each arc <u,v> seeds a search with R = {u,v}). Emit sinks are called
/// under a mutex; counting merges per-worker totals. Workers must be >= 1.
ParallelResult run_parallel(EngineKind kind, const Graph& g, uint32_t k,
                            CliqueSink& sink, const EngineOptions& opts,
                            const ParallelPlan& plan,
                            OrderingKind kclist_ordering = OrderingKind::Degeneracy);

}  // namespace kcl

#endif  // KCL_PARALLEL_HPP
