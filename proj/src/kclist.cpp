#include <algorithm>
#include <cassert>

#include "kcl/intersect.hpp"
#include "kcl/listing.hpp"

namespace kcl {

namespace {

// Algorithm: orient by the chosen total ordering, then recursively build
// the explicit subgraph induced by each vertex's out-neighbors down to
// l=2, where every remaining arc closes a clique.
class KClistEngine : public RootEngine {
public:
    KClistEngine(const Graph& g, uint32_t k, OrderingKind ord)
        : graph_(&g), k_(k), dag_(orient(g, make_ordering(g, ord))) {}

    uint32_t num_roots() const override { return dag_.num_vertices(); }
    std::span<const uint32_t> root_arcs(uint32_t u) const override {
        return dag_.out(u);
    }
    std::unique_ptr<RootWorker> make_worker() const override;
    const VertexOrdering& ordering() const override { return dag_.order; }

    const Graph* graph_;
    uint32_t k_;
    Dag dag_;
};

class KClistWorker : public RootWorker {
public:
    explicit KClistWorker(const KClistEngine& e) : e_(e) {
        levels_.resize(e_.k_ >= 2 ? e_.k_ - 1 : 0);
        clique_.reserve(e_.k_);
        tuple_.resize(e_.k_);
    }

    void run_root(uint32_t u, CliqueSink& sink) override {
        clique_.clear();
        clique_.push_back(u);
        build_level(0, e_.dag_.out(u), TopAdj{&e_.dag_});
        recurse(e_.k_ - 1, 0, sink);
        clique_.pop_back();
    }

    void run_arc(uint32_t u, uint32_t v, CliqueSink& sink) override {
        assert(e_.k_ >= 3);
        clique_.clear();
        clique_.push_back(u);
        clique_.push_back(v);
        build_level(0, e_.dag_.out(u), TopAdj{&e_.dag_});
        build_level(1, levels_[0].out_of(v), LevelAdj{&levels_[0]});
        recurse(e_.k_ - 2, 1, sink);
        clique_.clear();
    }

    uint64_t peak_scratch_ids() const override { return peak_ids_; }

private:
    // Explicit induced DAG: vertices keep their outer relabeled ids,
    // out-lists are sorted ascending (= ascending rank).
    struct Level {
        std::vector<uint32_t> verts;
        std::vector<uint32_t> offs;
        std::vector<uint32_t> adj;

        std::span<const uint32_t> out(uint32_t idx) const {
            return {adj.data() + offs[idx], adj.data() + offs[idx + 1]};
        }
        // out-list of a vertex by id; verts is sorted ascending
        std::span<const uint32_t> out_of(uint32_t v) const {
            auto it = std::lower_bound(verts.begin(), verts.end(), v);
            if (it == verts.end() || *it != v) return {};
            return out(static_cast<uint32_t>(it - verts.begin()));
        }
    };
    struct TopAdj {
        const Dag* dag;
        std::span<const uint32_t> out(uint32_t v) const { return dag->out(v); }
    };
    struct LevelAdj {
        const Level* lvl;
        std::span<const uint32_t> out(uint32_t v) const { return lvl->out_of(v); }
    };

    template <typename Adj>
    void build_level(uint32_t depth, std::span<const uint32_t> verts, Adj parent) {
        Level& lvl = levels_[depth];
        lvl.verts.assign(verts.begin(), verts.end());
        lvl.offs.assign(verts.size() + 1, 0);
        lvl.adj.clear();
        for (uint32_t i = 0; i < verts.size(); ++i) {
            auto pv = parent.out(verts[i]);
            size_t before = lvl.adj.size();
            lvl.adj.resize(before + std::min(pv.size(), verts.size()));
            size_t sz = merge_intersect(pv, verts, lvl.adj.data() + before);
            lvl.adj.resize(before + sz);
            lvl.offs[i + 1] = static_cast<uint32_t>(lvl.adj.size());
        }
        uint64_t live = 0;
        for (uint32_t d = 0; d <= depth; ++d)
            live += levels_[d].verts.size() + levels_[d].adj.size();
        peak_ids_ = std::max(peak_ids_, live);
    }

    void recurse(uint32_t l, uint32_t depth, CliqueSink& sink) {
        Level& lvl = levels_[depth];
        if (l == 1) {
            for (uint32_t v : lvl.verts) emit_with(v, sink);
            return;
        }
        if (l == 2) {
            if (sink.mode() == CliqueSink::Mode::Count) {
                sink.add(lvl.adj.size());
            } else {
                for (uint32_t i = 0; i < lvl.verts.size(); ++i) {
                    clique_.push_back(lvl.verts[i]);
                    for (uint32_t w : lvl.out(i)) emit_with(w, sink);
                    clique_.pop_back();
                }
            }
            return;
        }
        // children overwrite levels_[depth+1]; snapshot this level's verts
        // since build_level reads spans of it
        for (uint32_t i = 0; i < lvl.verts.size(); ++i) {
            clique_.push_back(lvl.verts[i]);
            build_level(depth + 1, lvl.out(i), LevelAdj{&lvl});
            recurse(l - 1, depth + 1, sink);
            clique_.pop_back();
        }
    }

    void emit_with(uint32_t v, CliqueSink& sink) {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = e_.dag_.label_of(r);
        tuple_[i++] = e_.dag_.label_of(v);
        sink.emit({tuple_.data(), i});
    }

    const KClistEngine& e_;
    std::vector<Level> levels_;
    std::vector<uint32_t> clique_;
    std::vector<uint32_t> tuple_;
    uint64_t peak_ids_ = 0;
};

std::unique_ptr<RootWorker> KClistEngine::make_worker() const {
    return std::make_unique<KClistWorker>(*this);
}

}  // namespace

std::unique_ptr<RootEngine> detail_make_kclist(const Graph& g, uint32_t k,
                                               OrderingKind ord) {
    return std::make_unique<KClistEngine>(g, k, ord);
}

}  // namespace kcl
