#include <algorithm>

#include "kcl/listing.hpp"

namespace kcl {

namespace {

constexpr uint64_t kMaxSubsets = 10'000'000;

// Generic path: ascending-id backtracking over a per-vertex membership
// bitset of the current clique's common neighborhood.
struct Generic {
    const Graph* g;
    uint32_t k;
    CliqueSink* sink;
    std::vector<uint32_t> clique;
    std::vector<uint32_t> tuple;
    uint64_t count = 0;

    bool adjacent_to_all(uint32_t v) const {
        auto nb = g->neighbors(v);
        for (uint32_t c : clique)
            if (!std::binary_search(nb.begin(), nb.end(), c)) return false;
        return true;
    }

    void go(uint32_t start) {
        if (clique.size() == k) {
            ++count;
            if (sink) {
                size_t i = 0;
                for (uint32_t c : clique) tuple[i++] = g->label(c);
                std::sort(tuple.begin(), tuple.end());
                sink->emit(tuple);
            }
            return;
        }
        for (uint32_t v = start; v < g->num_vertices(); ++v) {
            if (!adjacent_to_all(v)) continue;
            clique.push_back(v);
            go(v + 1);
            clique.pop_back();
        }
    }
};

}  // namespace

uint64_t brute_force(const Graph& g, uint32_t k, CliqueSink* sink) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    const uint32_t n = g.num_vertices();
    if (n > 30) {
        uint64_t combos = 0;
        if (!binomial(n, k, combos) || combos > kMaxSubsets)
            throw BruteForceGuardExceeded(
                "brute_force guard: n > 30 and C(n,k) > 10^7");
    }
    Generic bf{&g, k, sink, {}, std::vector<uint32_t>(k)};
    bf.clique.reserve(k);
    bf.go(0);
    if (sink && sink->mode() == CliqueSink::Mode::Count) sink->add(bf.count);
    return bf.count;
}

}  // namespace kcl
