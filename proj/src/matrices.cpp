#include "adm/matrices.hpp"

#include <queue>
#include <stdexcept>

namespace adm {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("distances require a nonempty graph");
    DistanceMatrix dm;
    dm.dist = Eigen::MatrixXi::Constant(n, n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int head = 0, tail = 0;
        queue[tail++] = s;
        dm.dist(s, s) = 0;
        while (head < tail) {
            int u = queue[head++];
            int du = dm.dist(s, u);
            for (int v : g.neighbors(u)) {
                if (dm.dist(s, v) < 0) {
                    dm.dist(s, v) = du + 1;
                    queue[tail++] = v;
                }
            }
        }
        if (tail != n) throw std::invalid_argument("graph is disconnected");
    }
    dm.diameter = dm.dist.maxCoeff();
    return dm;
}

SymIntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymIntMatrix a = SymIntMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1;
    return a;
}

SymIntMatrix kth_adjacency(const DistanceMatrix& dm, int k) {
    if (k < 1 || k > dm.diameter)
        throw std::invalid_argument("kth_adjacency requires 1 <= k <= diameter");
    const int n = dm.n();
    SymIntMatrix a = SymIntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dm.dist(i, j) == k) a(i, j) = 1;
    return a;
}

SymIntMatrix ad_matrix(const Graph& g, const DistanceMatrix& dm) {
    if (g.vertex_count() < 2) throw std::invalid_argument("AD matrix requires n >= 2");
    const int n = dm.n();
    const int d = dm.diameter;
    SymIntMatrix a = SymIntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dij = dm.dist(i, j);
            if (dij == 1)
                a(i, j) = 1;
            else if (dij == d && d >= 2)
                a(i, j) = d;
        }
    return a;
}

SymIntMatrix ad_matrix(const Graph& g) { return ad_matrix(g, all_pairs_distances(g)); }

SymIntMatrix WeightedGraph::adjacency() const {
    SymIntMatrix a = SymIntMatrix::Zero(n, n);
    for (const auto& e : edges) {
        a(e.u, e.v) = e.w;
        a(e.v, e.u) = e.w;
    }
    return a;
}

WeightedGraph weighted_view(const Graph& g) {
    auto dm = all_pairs_distances(g);
    if (dm.diameter < 2)
        throw std::invalid_argument(
            "weighted view requires diameter >= 2; use ad_matrix for complete graphs");
    WeightedGraph w;
    w.n = g.vertex_count();
    w.d = dm.diameter;
    for (auto [u, v] : g.edges()) w.edges.push_back({u, v, 1});
    for (int u = 0; u < w.n; ++u)
        for (int v = u + 1; v < w.n; ++v)
            if (dm.dist(u, v) == dm.diameter) w.edges.push_back({u, v, w.d});
    return w;
}

Graph ad_view_simple(const Graph& g, const DistanceMatrix& dm) {
    if (dm.diameter < 2) return g;
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dm.dist(u, v) == 1 || dm.dist(u, v) == dm.diameter) e.emplace_back(u, v);
    Graph out(n, e);
    out.set_name(g.name());
    return out;
}

Graph ad_view_simple(const Graph& g) { return ad_view_simple(g, all_pairs_distances(g)); }

}  // namespace adm
