#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adm/graph.hpp"

namespace adm {

// Backtracking isomorphism test with degree/distance signature refinement.
bool is_isomorphic(const Graph& a, const Graph& b);

// All connected graphs on n vertices up to isomorphism (1 <= n <= 8),
// generated by filtering the edge subsets of K_n and deduplicating.
// The result is cached per n.
const std::vector<Graph>& exhaustive_connected(int n);

// Connected G(n, p) sample with p = 2 ln(n) / n, rejection-sampled.
Graph random_connected(int n, std::mt19937_64& rng);

// Batch of connected random graphs with n drawn uniformly from
// [min_n, max_n]; deterministic for a fixed seed.
std::vector<Graph> random_connected_batch(int count, int min_n, int max_n,
                                          std::uint64_t seed);

}  // namespace adm
