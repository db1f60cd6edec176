#ifndef KCL_GEN_HPP
#define KCL_GEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kcl/graph.hpp"

namespace kcl {

// All generators are deterministic functions of their parameters and seed
// (mt19937_64 with fixed consumption order).

/// Erdos-Renyi G(n, p).
Graph gen_gnp(uint32_t n, double p, uint64_t seed);

/// Complete graph K_n.
Graph gen_complete(uint32_t n);

/// G(n, p) plus a clique planted on `clique` vertices sampled without
/// replacement. Returns the graph and the planted vertex set (sorted).
std::pair<Graph, std::vector<uint32_t>> gen_planted_clique(uint32_t n, double p,
                                                           uint32_t clique,
                                                           uint64_t seed);

/// Barabasi-Albert preferential attachment: starts from a clique on
/// `attach`+1 vertices, each new vertex attaches to `attach` distinct
/// existing vertices chosen proportionally to degree.
Graph gen_barabasi(uint32_t n, uint32_t attach, uint64_t seed);

}  // namespace kcl

#endif  // KCL_GEN_HPP
