#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "kcl/intersect.hpp"
#include "kcl/listing.hpp"

namespace kcl {

namespace {

class BitColEngine : public RootEngine {
public:
    BitColEngine(const Graph& g, uint32_t k, const EngineOptions& opts)
        : graph_(&g), k_(k), opts_(opts),
          dag_(orient(g, degeneracy_ordering(g).first)) {}

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

// Per-root state: the undirected subgraph induced by N+(u), its greedy
// coloring on the local inverse degree order, the color-ordered induced
// DAG, and the bitmap encoding of that DAG. Rebuilt per root; the bitmap
// is cached so EdgeParallel arcs sharing a root reuse it.
class BitColWorker : public RootWorker {
public:
    explicit BitColWorker(const BitColEngine& e) : e_(e) {
        const uint32_t delta = e_.dag_.max_out_degree;
        const uint32_t wpr = words_per_row(delta, e_.opts_.word_bits);
        pos_of_.assign(e_.dag_.num_vertices(), UINT32_MAX);
        local_deg_.resize(delta);
        color_.resize(delta);
        visit_.resize(delta);
        adj_offs_.resize(delta + 1);
        adj_.resize(static_cast<size_t>(delta) * delta);
        rows_.resize(static_cast<size_t>(delta) * wpr);
        levels_.resize(e_.k_ >= 2 ? (e_.k_ - 1) * wpr : 0);
        clique_.reserve(e_.k_);
        tuple_.resize(e_.k_);
    }

    void run_root(uint32_t u, CliqueSink& sink) override {
        const uint32_t k = e_.k_;
        if (e_.dag_.out_degree(u) < k - 1) return;
        prepare_root(u);
        const uint32_t wpr = wpr_;
        uint64_t* top = levels_.data();
        make_full_row(deg_, e_.opts_.word_bits, top);
        clique_.clear();
        clique_.push_back(u);
        live_words_ = wpr;
        note_words();
        recurse(k - 1, 0, {top, wpr}, sink);
        live_words_ = 0;
    }

    void run_arc(uint32_t u, uint32_t v, CliqueSink& sink) override {
        const uint32_t k = e_.k_;
        assert(k >= 3);
        if (e_.dag_.out_degree(u) < k - 1) return;
        prepare_root(u);
        uint32_t pos = pos_of_[v];
        assert(pos != UINT32_MAX);
        if (e_.opts_.prune_color && color_[pos] < k - 1) return;
        clique_.clear();
        clique_.push_back(u);
        clique_.push_back(v);
        live_words_ = wpr_;
        note_words();
        recurse(k - 2, 1, row(pos), sink);
        live_words_ = 0;
    }

    uint64_t peak_scratch_words() const override { return peak_words_; }

private:
    std::span<const uint64_t> row(uint32_t pos) const {
        return {rows_.data() + static_cast<size_t>(pos) * wpr_, wpr_};
    }

    void prepare_root(uint32_t u) {
        if (prepared_ && root_ == u) return;
        if (prepared_)
            for (uint32_t v : universe_) pos_of_[v] = UINT32_MAX;
        prepared_ = true;
        root_ = u;
        auto universe = e_.dag_.out(u);
        deg_ = static_cast<uint32_t>(universe.size());
        universe_ = universe;
        wpr_ = words_per_row(deg_, e_.opts_.word_bits);
        for (uint32_t i = 0; i < deg_; ++i) pos_of_[universe[i]] = i;

        // undirected induced adjacency over positions: every arc v->w of
        // the outer DAG with both ends in the universe is an edge
        std::fill(local_deg_.begin(), local_deg_.begin() + deg_, 0u);
        for (uint32_t i = 0; i < deg_; ++i)
            for (uint32_t w : e_.dag_.out(universe[i]))
                if (pos_of_[w] != UINT32_MAX) {
                    ++local_deg_[i];
                    ++local_deg_[pos_of_[w]];
                }
        adj_offs_[0] = 0;
        for (uint32_t i = 0; i < deg_; ++i)
            adj_offs_[i + 1] = adj_offs_[i] + local_deg_[i];
        std::vector<uint32_t>& cursor = local_deg_;  // reuse as cursors
        std::copy(adj_offs_.begin(), adj_offs_.begin() + deg_, cursor.begin());
        for (uint32_t i = 0; i < deg_; ++i)
            for (uint32_t w : e_.dag_.out(universe[i]))
                if (uint32_t j = pos_of_[w]; j != UINT32_MAX) {
                    adj_[cursor[i]++] = j;
                    adj_[cursor[j]++] = i;
                }

        // greedy coloring on the local inverse degree order
        for (uint32_t i = 0; i < deg_; ++i) visit_[i] = i;
        std::sort(visit_.begin(), visit_.begin() + deg_, [&](uint32_t a, uint32_t b) {
            uint32_t da = adj_offs_[a + 1] - adj_offs_[a];
            uint32_t db = adj_offs_[b + 1] - adj_offs_[b];
            return da != db ? da > db : a < b;
        });
        std::fill(color_.begin(), color_.begin() + deg_, 0u);
        for (uint32_t t = 0; t < deg_; ++t) {
            uint32_t v = visit_[t];
            uint64_t used = 0;  // deg_ <= Delta; colors fit one word per 64
            for (uint32_t i = adj_offs_[v]; i < adj_offs_[v + 1]; ++i) {
                uint32_t c = color_[adj_[i]];
                if (c && c <= 64) used |= uint64_t{1} << (c - 1);
            }
            uint32_t c = static_cast<uint32_t>(std::countr_one(used)) + 1;
            if (c > 64) {  // fall back for very high local degrees
                std::vector<bool> big(deg_ + 2, false);
                for (uint32_t i = adj_offs_[v]; i < adj_offs_[v + 1]; ++i)
                    if (uint32_t cc = color_[adj_[i]]) big[std::min<uint32_t>(cc, deg_ + 1)] = true;
                c = 1;
                while (big[c]) ++c;
            }
            color_[v] = c;
        }

        // color-ordered DAG rows: arc i->j iff edge (i,j) and c_i > c_j
        std::fill(rows_.begin(), rows_.begin() + static_cast<size_t>(deg_) * wpr_, 0);
        const uint32_t L = e_.opts_.word_bits;
        for (uint32_t i = 0; i < deg_; ++i) {
            uint64_t* r = rows_.data() + static_cast<size_t>(i) * wpr_;
            for (uint32_t a = adj_offs_[i]; a < adj_offs_[i + 1]; ++a) {
                uint32_t j = adj_[a];
                if (color_[i] > color_[j]) r[j / L] |= uint64_t{1} << (j % L);
            }
        }
        note_words();
    }

    void recurse(uint32_t l, uint32_t depth, std::span<const uint64_t> cand,
                 CliqueSink& sink) {
        const uint32_t L = e_.opts_.word_bits;
        if (l == 1) {
            for_each_bit(cand, [&](uint32_t pos) { emit_with(pos, sink); });
            return;
        }
        uint64_t* next = levels_.data() + static_cast<size_t>(depth + 1) * wpr_;
        std::span<uint64_t> out{next, wpr_};
        uint32_t base = 0;
        for (uint64_t word : cand) {
            uint64_t w = word;
            while (w) {
                uint32_t pos = base + static_cast<uint32_t>(std::countr_zero(w));
                w &= w - 1;
                if (e_.opts_.prune_color && color_[pos] < l) continue;
                bit_join(row(pos), cand, out);
                if (l == 2) {
                    if (sink.mode() == CliqueSink::Mode::Count) {
                        sink.add(popcount_row(out));
                    } else {
                        clique_pos_.push_back(pos);
                        for_each_bit(out, [&](uint32_t q) { emit_with(q, sink); });
                        clique_pos_.pop_back();
                    }
                } else if (!e_.opts_.prune_size ||
                           popcount_row(out) >= l - 1) {
                    clique_pos_.push_back(pos);
                    live_words_ += wpr_;
                    note_words();
                    recurse(l - 1, depth + 1, out, sink);
                    live_words_ -= wpr_;
                    clique_pos_.pop_back();
                }
            }
            base += L;
        }
    }

    template <typename F>
    void for_each_bit(std::span<const uint64_t> rowspan, F&& f) const {
        uint32_t base = 0;
        for (uint64_t w : rowspan) {
            while (w) {
                f(base + static_cast<uint32_t>(std::countr_zero(w)));
                w &= w - 1;
            }
            base += e_.opts_.word_bits;
        }
    }

    void emit_with(uint32_t pos, CliqueSink& sink) {
        fill_prefix();
        tuple_[clique_.size() + clique_pos_.size()] = label_at(pos);
        sink.emit({tuple_.data(), clique_.size() + clique_pos_.size() + 1});
    }

    void fill_prefix() {
        size_t i = 0;
        for (uint32_t r : clique_) tuple_[i++] = e_.dag_.label_of(r);
        for (uint32_t p : clique_pos_) tuple_[i++] = label_at(p);
    }

    uint32_t label_at(uint32_t pos) const {
        return e_.dag_.label_of(universe_[pos]);
    }

    void note_words() {
        peak_words_ = std::max(peak_words_,
                               static_cast<uint64_t>(deg_) * wpr_ + live_words_);
    }

    const BitColEngine& e_;
    std::vector<uint32_t> pos_of_;
    std::span<const uint32_t> universe_;
    std::vector<uint32_t> local_deg_, color_, visit_, adj_offs_, adj_;
    std::vector<uint64_t> rows_;
    std::vector<uint64_t> levels_;
    std::vector<uint32_t> clique_;       // outer relabeled ids (the root, or root+arc head)
    std::vector<uint32_t> clique_pos_;   // inner universe positions
    std::vector<uint32_t> tuple_;
    uint32_t deg_ = 0, wpr_ = 0, root_ = 0;
    bool prepared_ = false;
    uint64_t live_words_ = 0, peak_words_ = 0;
};

std::unique_ptr<RootWorker> BitColEngine::make_worker() const {
    return std::make_unique<BitColWorker>(*this);
}

}  // namespace

std::unique_ptr<RootEngine> detail_make_bitcol(const Graph& g, uint32_t k,
                                               const EngineOptions& opts) {
    return std::make_unique<BitColEngine>(g, k, opts);
}

}  // namespace kcl
