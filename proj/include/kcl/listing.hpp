#ifndef KCL_LISTING_HPP
#define KCL_LISTING_HPP

#include <memory>
#include <optional>

#include "kcl/graph.hpp"
#include "kcl/ordering.hpp"
#include "kcl/preprocess.hpp"
#include "kcl/sink.hpp"

namespace kcl {

struct EngineOptions {
    bool use_precore = true;
    bool use_prelist = true;
    // Pruning toggles; disabling any of them must not change the output.
    bool prune_degree = true;  // skip candidates with d+ <= l-2
    bool prune_size = true;    // recurse only when |C'| > l-2
    bool prune_color = true;   // skip candidates with color < l (BitCol)
    uint32_t word_bits = 64;   // payload bits per bitmap word (L)
};

struct ListingResult {
    ReductionReport reduction;
    uint64_t peak_scratch_ids = 0;    // candidate ids (SDegree/kClist)
    uint64_t peak_scratch_words = 0;  // bitmap words (BitCol)
};

/// Per-worker search state: owns all scratch, no allocation on the hot
/// path. run_root(u) lists the cliques rooted at relabeled vertex u;
/// run_arc(u,v) lists the cliques rooted at arc <u,v> (v must be an
/// out-neighbor of u).
class RootWorker {
public:
    virtual ~RootWorker() = default;
    virtual void run_root(uint32_t u, CliqueSink& sink) = 0;
    virtual void run_arc(uint32_t u, uint32_t v, CliqueSink& sink) = 0;
    virtual uint64_t peak_scratch_ids() const { return 0; }
    virtual uint64_t peak_scratch_words() const { return 0; }
};

/// Immutable per-run context (DAG, orderings); shared across workers.
class RootEngine {
public:
    virtual ~RootEngine() = default;
    virtual uint32_t num_roots() const = 0;
    virtual std::span<const uint32_t> root_arcs(uint32_t u) const = 0;
    virtual std::unique_ptr<RootWorker> make_worker() const = 0;
    virtual const VertexOrdering& ordering() const = 0;
};

enum class EngineKind { SDegree, BitCol, KClist };

/// Build an engine over an already-preprocessed graph. The engine keeps a
/// reference to g; g must outlive it.
std::unique_ptr<RootEngine> make_engine(EngineKind kind, const Graph& g,
                                        uint32_t k, const EngineOptions& opts = {},
                                        OrderingKind kclist_ordering = OrderingKind::Degeneracy);

// Serial entry points: preprocessing (per opts) + root loop.
ListingResult sdegree(const Graph& g, uint32_t k, CliqueSink& sink,
                      const EngineOptions& opts = {});
ListingResult bitcol(const Graph& g, uint32_t k, CliqueSink& sink,
                     const EngineOptions& opts = {});
ListingResult kclist(const Graph& g, uint32_t k, OrderingKind ordering,
                     CliqueSink& sink, const EngineOptions& opts = {});

/// Faithful level-by-level descending-degree recursion with vertex
/// removal; inherently sequential, used as an independent cross-check.
void chiba_nishizeki(const Graph& g, uint32_t k, CliqueSink& sink);

struct BruteForceGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Backtracking enumeration over ascending vertex ids against the plain
/// undirected adjacency; independent of every ordering/DAG code path.
/// Guard: n <= 30 or C(n,k) <= 10^7.
uint64_t brute_force(const Graph& g, uint32_t k, CliqueSink* sink = nullptr);

}  // namespace kcl

#endif  // KCL_LISTING_HPP
