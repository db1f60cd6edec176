#include <algorithm>
#include <stdexcept>

#include "kcl/listing.hpp"

namespace kcl {

namespace {

class Chiba {
public:
    Chiba(const Graph& g, uint32_t k, CliqueSink& sink)
        : g_(&g), k_(k), sink_(&sink), mark_(g.num_vertices(), 0) {
        clique_.reserve(k);
        tuple_.resize(k);
    }

    void run() {
        const uint32_t n = g_->num_vertices();
        std::vector<uint32_t> all;
        all.reserve(n);
        for (uint32_t v = 0; v < n; ++v) all.push_back(v);
        recurse(k_, 1, all);
    }

private:
    // Membership in the current subgraph U is mark_[v] == depth. Deleting
    // a vertex within the level zeroes its mark; on exit every vertex of U
    // is restored to the parent's depth, so deletions are level-local.
    void recurse(uint32_t l, uint32_t depth, const std::vector<uint32_t>& U) {
        for (uint32_t v : U) mark_[v] = depth;
        if (l == 2) {
            for (uint32_t v : U)
                for (uint32_t w : g_->neighbors(v)) {
                    if (mark_[w] != depth || w <= v) continue;
                    if (sink_->mode() == CliqueSink::Mode::Count) {
                        sink_->add(1);
                    } else {
                        emit2(v, w);
                    }
                }
            for (uint32_t v : U) mark_[v] = depth - 1;
            return;
        }
        if (l == 1) {
            for (uint32_t v : U) emit1(v);
            for (uint32_t v : U) mark_[v] = depth - 1;
            return;
        }
        std::vector<uint32_t> order(U);
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            uint32_t da = degree_in(a, depth);
            uint32_t db = degree_in(b, depth);
            return da != db ? da > db : a < b;
        });
        for (uint32_t v : order) {
            std::vector<uint32_t> sub;
            for (uint32_t w : g_->neighbors(v))
                if (mark_[w] == depth) sub.push_back(w);
            if (sub.size() >= l - 1) {
                clique_.push_back(v);
                recurse(l - 1, depth + 1, sub);
                clique_.pop_back();
            }
            mark_[v] = 0;
        }
        for (uint32_t v : U) mark_[v] = depth - 1;
    }

    uint32_t degree_in(uint32_t v, uint32_t depth) const {
        uint32_t d = 0;
        for (uint32_t w : g_->neighbors(v))
            if (mark_[w] == depth) ++d;
        return d;
    }

    void emit1(uint32_t v) {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = g_->label(r);
        tuple_[i] = g_->label(v);
        sink_->emit(tuple_);
    }

    void emit2(uint32_t v, uint32_t w) {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = g_->label(r);
        tuple_[i++] = g_->label(v);
        tuple_[i] = g_->label(w);
        sink_->emit(tuple_);
    }

    const Graph* g_;
    uint32_t k_;
    CliqueSink* sink_;
    std::vector<uint32_t> mark_;
    std::vector<uint32_t> clique_;
    std::vector<uint32_t> tuple_;
};

}  // namespace

void chiba_nishizeki(const Graph& g, uint32_t k, CliqueSink& sink) {
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
        return;
    }
    Chiba engine(g, k, sink);
    engine.run();
}

}  // namespace kcl
