#include <algorithm>
#include <cassert>

#include "kcl/intersect.hpp"
#include "kcl/listing.hpp"

namespace kcl {

namespace {

class SDegreeWorker;

class SDegreeEngine : public RootEngine {
public:
    SDegreeEngine(const Graph& g, uint32_t k, const EngineOptions& opts)
        : graph_(&g), k_(k), opts_(opts), dag_(orient(g, degree_ordering(g))) {}

    uint32_t num_roots() const override { return dag_.num_vertices(); }
    std::span<const uint32_t> root_arcs(uint32_t u) const override {
        return dag_.out(u);
    }
    std::unique_ptr<RootWorker> make_worker() const override;
    const VertexOrdering& ordering() const override { return dag_.order; }

    const Graph* graph_;
    uint32_t k_;
    EngineOptions opts_;
    Dag dag_;
};

class SDegreeWorker : public RootWorker {
public:
    explicit SDegreeWorker(const SDegreeEngine& e) : e_(e) {
        const uint32_t k = e_.k_;
        const uint32_t delta = e_.dag_.max_out_degree;
        levels_.resize(k >= 2 ? k - 2 : 0);
        for (auto& buf : levels_) buf.resize(delta);
        clique_.reserve(k);
        tuple_.resize(k);
    }

    void run_root(uint32_t u, CliqueSink& sink) override {
        const uint32_t k = e_.k_;
        if (e_.dag_.out_degree(u) < k - 1) return;
        clique_.clear();
        clique_.push_back(u);
        recurse(k - 1, e_.dag_.out(u), sink);
    }

    void run_arc(uint32_t u, uint32_t v, CliqueSink& sink) override {
        const uint32_t k = e_.k_;
        assert(k >= 3);
        if (e_.dag_.out_degree(u) < k - 1) return;
        auto& buf = levels_[0];
        size_t sz = block_merge_intersect(e_.dag_.out(v), e_.dag_.out(u), buf.data());
        note_live(sz);
        clique_.clear();
        clique_.push_back(u);
        clique_.push_back(v);
        depth_ = 1;  // buffer 0 holds C
        live_ = sz;
        recurse(k - 2, {buf.data(), sz}, sink);
        live_ = 0;
        depth_ = 0;
    }

    uint64_t peak_scratch_ids() const override { return peak_ids_; }

private:
    // Finds the l-cliques completing clique_ from candidate set C.
    // Candidates and clique_ hold relabeled ids; buffers live per depth so
    // no allocation happens past construction.
    void recurse(uint32_t l, std::span<const uint32_t> C, CliqueSink& sink) {
        const Dag& dag = e_.dag_;
        if (l == 1) {
            for (uint32_t v : C) emit1(v, sink);
            return;
        }
        if (l == 2) {
            for (uint32_t v : C) {
                if (e_.opts_.prune_degree && dag.out_degree(v) == 0) continue;
                auto& buf = levels_[depth_];
                size_t sz = block_merge_intersect(dag.out(v), C, buf.data());
                note_live(sz);
                if (sink.mode() == CliqueSink::Mode::Count) {
                    sink.add(sz);
                } else {
                    for (size_t i = 0; i < sz; ++i) emit2(v, buf[i], sink);
                }
            }
            return;
        }
        for (uint32_t v : C) {
            if (e_.opts_.prune_degree && dag.out_degree(v) <= l - 2) continue;
            auto& buf = levels_[depth_];
            size_t sz = block_merge_intersect(dag.out(v), C, buf.data());
            note_live(sz);
            if (!e_.opts_.prune_size || sz > l - 2) {
                clique_.push_back(v);
                ++depth_;
                live_ += sz;
                recurse(l - 1, {buf.data(), sz}, sink);
                live_ -= sz;
                --depth_;
                clique_.pop_back();
            }
        }
    }

    void emit1(uint32_t v, CliqueSink& sink) {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = e_.dag_.label_of(r);
        tuple_[i] = e_.dag_.label_of(v);
        sink.emit(tuple_);
    }

    void emit2(uint32_t v, uint32_t w, CliqueSink& sink) {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = e_.dag_.label_of(r);
        tuple_[i++] = e_.dag_.label_of(v);
        tuple_[i] = e_.dag_.label_of(w);
        sink.emit(tuple_);
    }

    void note_live(size_t sz) { peak_ids_ = std::max(peak_ids_, live_ + sz); }

    const SDegreeEngine& e_;
    std::vector<std::vector<uint32_t>> levels_;
    std::vector<uint32_t> clique_;
    std::vector<uint32_t> tuple_;
    uint32_t depth_ = 0;
    uint64_t live_ = 0;
    uint64_t peak_ids_ = 0;
};

std::unique_ptr<RootWorker> SDegreeEngine::make_worker() const {
    return std::make_unique<SDegreeWorker>(*this);
}

}  // namespace

std::unique_ptr<RootEngine> detail_make_sdegree(const Graph& g, uint32_t k,
                                                const EngineOptions& opts) {
    return std::make_unique<SDegreeEngine>(g, k, opts);
}

}  // namespace kcl
