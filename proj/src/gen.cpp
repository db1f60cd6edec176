#include <algorithm>
#include <random>
#include <stdexcept>

#include "kcl/gen.hpp"

namespace kcl {

namespace {

using Edges = std::vector<std::pair<uint32_t, uint32_t>>;

Edges complete_edges(std::span<const uint32_t> verts) {
    Edges e;
    e.reserve(verts.size() * (verts.size() - 1) / 2);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            e.emplace_back(verts[i], verts[j]);
    return e;
}

}  // namespace

Graph gen_gnp(uint32_t n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Edges edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_complete(uint32_t n) {
    std::vector<uint32_t> verts(n);
    for (uint32_t v = 0; v < n; ++v) verts[v] = v;
    return Graph::from_edges(n, complete_edges(verts));
}

std::pair<Graph, std::vector<uint32_t>> gen_planted_clique(uint32_t n, double p,
                                                           uint32_t clique,
                                                           uint64_t seed) {
    if (clique > n) throw std::invalid_argument("clique size exceeds n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Edges edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    // sample the planted set without replacement (partial Fisher-Yates)
    std::vector<uint32_t> pool(n);
    for (uint32_t v = 0; v < n; ++v) pool[v] = v;
    for (uint32_t i = 0; i < clique; ++i) {
        std::uniform_int_distribution<uint32_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<uint32_t> planted(pool.begin(), pool.begin() + clique);
    std::sort(planted.begin(), planted.end());
    auto ce = complete_edges(planted);
    edges.insert(edges.end(), ce.begin(), ce.end());
    return {Graph::from_edges(n, std::move(edges)), std::move(planted)};
}

Graph gen_barabasi(uint32_t n, uint32_t attach, uint64_t seed) {
    if (attach == 0) throw std::invalid_argument("attach must be >= 1");
    if (n < attach + 1) throw std::invalid_argument("n must exceed attach");
    std::mt19937_64 rng(seed);
    Edges edges;
    // endpoint multiset; sampling uniformly from it is degree-proportional
    std::vector<uint32_t> endpoints;
    std::vector<uint32_t> seeds(attach + 1);
    for (uint32_t v = 0; v <= attach; ++v) seeds[v] = v;
    for (auto [a, b] : complete_edges(seeds)) {
        edges.emplace_back(a, b);
        endpoints.push_back(a);
        endpoints.push_back(b);
    }
    std::vector<uint32_t> chosen;
    for (uint32_t v = attach + 1; v < n; ++v) {
        chosen.clear();
        while (chosen.size() < attach) {
            std::uniform_int_distribution<size_t> pick(0, endpoints.size() - 1);
            uint32_t t = endpoints[pick(rng)];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                chosen.push_back(t);
        }
        for (uint32_t t : chosen) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace kcl
