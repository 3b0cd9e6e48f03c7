#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "adm/graph.hpp"

namespace adm {

using SymIntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Exact hop-count distances of a connected graph.
struct DistanceMatrix {
    Eigen::MatrixXi dist;
    int diameter = 0;
    int n() const { return static_cast<int>(dist.rows()); }
};

// BFS from every vertex; throws on disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

SymIntMatrix adjacency_matrix(const Graph& g);

// 0-1 matrix of the pairs at distance exactly k, 1 <= k <= diameter.
SymIntMatrix kth_adjacency(const DistanceMatrix& dm, int k);

// A(G) + d*A_d(G) for diameter d >= 2; plain A(G) when d == 1.
SymIntMatrix ad_matrix(const Graph& g);
SymIntMatrix ad_matrix(const Graph& g, const DistanceMatrix& dm);

struct WeightedEdge {
    int u, v;
    std::int64_t w;
};

// Weighted graph whose adjacency matrix equals the AD matrix: weight-1 edges
// for adjacency, weight-d edges for antipodal pairs.
struct WeightedGraph {
    int n = 0;
    std::int64_t d = 0;
    std::vector<WeightedEdge> edges;
    SymIntMatrix adjacency() const;
};

// Requires diameter >= 2 (at diameter 1 the two edge sets would coincide;
// use ad_matrix directly).
WeightedGraph weighted_view(const Graph& g);

// Underlying simple graph of the weighted view (adjacent-or-antipodal
// relation); equals g itself when the diameter is 1.
Graph ad_view_simple(const Graph& g);
Graph ad_view_simple(const Graph& g, const DistanceMatrix& dm);

}  // namespace adm
