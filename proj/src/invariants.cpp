#include "adm/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace adm {

namespace {

struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    static MaskGraph from(const Graph& g) {
        MaskGraph m;
        m.n = g.vertex_count();
        if (m.n > 64) throw std::invalid_argument("bitset solver limited to 64 vertices");
        m.adj.assign(static_cast<size_t>(m.n), 0);
        for (int u = 0; u < m.n; ++u)
            for (int v : g.neighbors(u)) m.adj[static_cast<size_t>(u)] |= std::uint64_t(1) << v;
        return m;
    }

    MaskGraph complement() const {
        MaskGraph m;
        m.n = n;
        const std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
        m.adj.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            m.adj[static_cast<size_t>(v)] =
                all & ~adj[static_cast<size_t>(v)] & ~(std::uint64_t(1) << v);
        return m;
    }
};

// Branch and bound maximum clique with a greedy-coloring bound.
struct CliqueSolver {
    const MaskGraph& g;
    int best = 0;

    explicit CliqueSolver(const MaskGraph& graph) : g(graph) {}

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // Greedy coloring of the candidate set; color number bounds the
        // clique extension size.
        std::vector<std::pair<int, int>> order;  // (vertex, color)
        std::uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t cls = uncolored;
            while (cls) {
                int v = std::countr_zero(cls);
                cls &= ~(g.adj[static_cast<size_t>(v)] | (std::uint64_t(1) << v));
                uncolored &= ~(std::uint64_t(1) << v);
                order.emplace_back(v, color);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            auto [v, c] = order[static_cast<size_t>(i)];
            if (size + c <= best) return;
            expand(cand & g.adj[static_cast<size_t>(v)], size + 1);
            cand &= ~(std::uint64_t(1) << v);
        }
    }

    int solve() {
        const std::uint64_t all =
            (g.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n) - 1);
        expand(all, 0);
        return best;
    }
};

// Backtracking k-colorability with saturation-first vertex selection.
struct ColorSolver {
    const MaskGraph& g;
    int k = 0;
    std::vector<int> color;  // 0 = uncolored

    explicit ColorSolver(const MaskGraph& graph) : g(graph) {}

    bool feasible(int colors) {
        k = colors;
        color.assign(static_cast<size_t>(g.n), 0);
        return place(0);
    }

    bool place(int colored) {
        if (colored == g.n) return true;
        // most saturated uncolored vertex, ties by degree among uncolored
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[static_cast<size_t>(v)] != 0) continue;
            std::uint64_t nbs = g.adj[static_cast<size_t>(v)];
            std::uint64_t seen = 0;
            for (std::uint64_t m = nbs; m; m &= m - 1) {
                int u = std::countr_zero(m);
                if (color[static_cast<size_t>(u)] != 0)
                    seen |= std::uint64_t(1) << color[static_cast<size_t>(u)];
            }
            int sat = std::popcount(seen);
            int deg = std::popcount(nbs);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int max_used = 0;
        for (int v = 0; v < g.n; ++v) max_used = std::max(max_used, color[static_cast<size_t>(v)]);
        std::uint64_t forbidden = 0;
        for (std::uint64_t m = g.adj[static_cast<size_t>(pick)]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (color[static_cast<size_t>(u)] != 0)
                forbidden |= std::uint64_t(1) << color[static_cast<size_t>(u)];
        }
        const int limit = std::min(k, max_used + 1);  // new colors are interchangeable
        for (int c = 1; c <= limit; ++c) {
            if (forbidden >> c & 1) continue;
            color[static_cast<size_t>(pick)] = c;
            if (place(colored + 1)) return true;
            color[static_cast<size_t>(pick)] = 0;
        }
        return false;
    }
};

int greedy_coloring_upper(const MaskGraph& g) {
    std::vector<int> order(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(g.adj[static_cast<size_t>(a)]) >
               std::popcount(g.adj[static_cast<size_t>(b)]);
    });
    std::vector<int> color(static_cast<size_t>(g.n), 0);
    int used = 0;
    for (int v : order) {
        std::uint64_t forbidden = 0;
        for (std::uint64_t m = g.adj[static_cast<size_t>(v)]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (color[static_cast<size_t>(u)]) forbidden |= std::uint64_t(1) << color[static_cast<size_t>(u)];
        }
        int c = 1;
        while (forbidden >> c & 1) ++c;
        color[static_cast<size_t>(v)] = c;
        used = std::max(used, c);
    }
    return used;
}

int chromatic_masks(const MaskGraph& g) {
    if (g.n == 0) return 0;
    CliqueSolver cs(g);
    int lo = cs.solve();
    int hi = greedy_coloring_upper(g);
    ColorSolver col(g);
    for (int c = lo; c < hi; ++c)
        if (col.feasible(c)) return c;
    return hi;
}

double one_norm(const SymIntMatrix& m) {
    double best = 0;
    for (int j = 0; j < m.cols(); ++j) {
        double s = 0;
        for (int i = 0; i < m.rows(); ++i) s += std::abs(static_cast<double>(m(i, j)));
        best = std::max(best, s);
    }
    return best;
}

struct SpectralContext {
    DistanceMatrix dm;
    SymIntMatrix ad;
    Spectrum spec;
    DegreeProfile profile;
};

SpectralContext spectral_context(const Graph& g) {
    SpectralContext c;
    c.dm = all_pairs_distances(g);
    c.ad = ad_matrix(g, c.dm);
    c.spec = eigenvalues_sym(c.ad);
    c.profile = degree_profile(g);
    return c;
}

}  // namespace

DegreeProfile degree_profile(const Graph& g) {
    auto dm = all_pairs_distances(g);
    const int n = g.vertex_count();
    const int d = dm.diameter;
    DegreeProfile p;
    p.degree.resize(static_cast<size_t>(n));
    p.diametrical_degree.assign(static_cast<size_t>(n), 0);
    p.ad_degree.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        p.degree[static_cast<size_t>(v)] = g.degree(v);
        if (d >= 2)
            for (int u = 0; u < n; ++u)
                if (dm.dist(v, u) == d) ++p.diametrical_degree[static_cast<size_t>(v)];
        p.ad_degree[static_cast<size_t>(v)] =
            p.degree[static_cast<size_t>(v)] +
            static_cast<std::int64_t>(d) * p.diametrical_degree[static_cast<size_t>(v)];
        p.diametrical_degree_sum += p.diametrical_degree[static_cast<size_t>(v)];
    }
    p.min_diametrical = *std::min_element(p.diametrical_degree.begin(), p.diametrical_degree.end());
    p.max_diametrical = *std::max_element(p.diametrical_degree.begin(), p.diametrical_degree.end());
    p.min_ad = *std::min_element(p.ad_degree.begin(), p.ad_degree.end());
    p.max_ad = *std::max_element(p.ad_degree.begin(), p.ad_degree.end());
    std::int64_t total = 0;
    for (auto a : p.ad_degree) total += a;
    p.mean_ad = static_cast<double>(total) / n;
    p.ad_regular = (p.min_ad == p.max_ad);
    return p;
}

BoundReport make_bound(std::string name, double left, double right) {
    BoundReport r;
    r.name = std::move(name);
    r.left = left;
    r.right = right;
    r.gap = right - left;
    r.holds = left <= right + 1e-9;
    return r;
}

int max_clique(const Graph& g) {
    CliqueSolver s(MaskGraph::from(g));
    return s.solve();
}

int max_independent_set(const Graph& g) {
    CliqueSolver s(MaskGraph::from(g).complement());
    return s.solve();
}

int chromatic_number_exact(const Graph& g) { return chromatic_masks(MaskGraph::from(g)); }

int ad_independence_number(const Graph& g) {
    if (g.vertex_count() > kIndependenceCap)
        throw std::invalid_argument("AD independence number capped at 24 vertices");
    return max_independent_set(ad_view_simple(g));
}

int ad_chromatic_number(const Graph& g) {
    if (g.vertex_count() > kChromaticCap)
        throw std::invalid_argument("AD chromatic number capped at 16 vertices");
    return chromatic_number_exact(ad_view_simple(g));
}

std::array<BoundReport, 2> trace_moment_check(const Graph& g) {
    auto c = spectral_context(g);
    const int n = g.vertex_count();
    std::int64_t trace_sq = 0;  // trace(AD^2) = sum of squared entries
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) trace_sq += c.ad(i, j) * c.ad(i, j);
    const std::int64_t moment = 2 * static_cast<std::int64_t>(g.edge_count()) +
                                static_cast<std::int64_t>(c.dm.diameter) * c.dm.diameter *
                                    c.profile.diametrical_degree_sum;
    BoundReport zero = make_bound("trace_zero", std::abs(c.spec.sum()), n * 1e-9);
    BoundReport second = make_bound("second_moment", static_cast<double>(trace_sq),
                                    static_cast<double>(moment));
    second.holds = (trace_sq == moment);  // exact integer identity
    second.gap = static_cast<double>(moment - trace_sq);
    return {zero, second};
}

BoundReport spectral_radius_bound(const Graph& g) {
    auto c = spectral_context(g);
    const int n = g.vertex_count();
    const double moment = 2.0 * g.edge_count() +
                          static_cast<double>(c.dm.diameter) * c.dm.diameter *
                              static_cast<double>(c.profile.diametrical_degree_sum);
    return make_bound("spectral_radius", c.spec.lambda_max(),
                      std::sqrt((n - 1.0) / n * moment));
}

std::array<BoundReport, 2> bipartite_least_eig_bound(const Graph& g) {
    auto dm = all_pairs_distances(g);
    if (!(bipartition(g).has_value() && dm.diameter % 2 == 1))
        throw std::invalid_argument("bound requires a diametrical bipartite graph");
    auto c = spectral_context(g);
    const double rhs =
        std::sqrt(g.edge_count() + 0.5 * static_cast<double>(c.dm.diameter) * c.dm.diameter *
                                       static_cast<double>(c.profile.diametrical_degree_sum));
    return {make_bound("least_eig_abs", std::abs(c.spec.lambda_min()), rhs),
            make_bound("least_eig_literal", c.spec.lambda_min(), rhs)};
}

BoundReport inertia_bound(const Graph& g) {
    auto c = spectral_context(g);
    const int n = g.vertex_count();
    const double zero_tol = 1e-8 * std::max(1.0, one_norm(c.ad));
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
        if (c.spec.values(i) > zero_tol) ++pos;
        else if (c.spec.values(i) < -zero_tol) ++neg;
    }
    const int alpha = ad_independence_number(g);
    return make_bound("inertia", alpha, std::min(n - pos, n - neg));
}

BoundReport chromatic_lower_bound(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("bound requires at least one edge");
    auto c = spectral_context(g);
    const int chi = ad_chromatic_number(g);
    return make_bound("chromatic_lower", 1.0 - c.spec.lambda_max() / c.spec.lambda_min(),
                      chi);
}

std::optional<BoundReport> planar_fourcolor_check(const Graph& g, bool planar_assertion) {
    if (!planar_assertion)
        throw std::invalid_argument("caller must assert planarity for this check");
    const int chi = chromatic_number_exact(g);
    const int chi_ad = ad_chromatic_number(g);
    if (chi != chi_ad) return std::nullopt;  // corollary precondition fails
    auto c = spectral_context(g);
    return make_bound("planar_fourcolor", c.spec.lambda_max(), -3.0 * c.spec.lambda_min());
}

std::vector<BoundReport> mean_degree_sandwich(const Graph& g) {
    auto c = spectral_context(g);
    return {make_bound("min_ad_le_mean", static_cast<double>(c.profile.min_ad),
                       c.profile.mean_ad),
            make_bound("mean_le_lambda1", c.profile.mean_ad, c.spec.lambda_max()),
            make_bound("lambda1_le_max_ad", c.spec.lambda_max(),
                       static_cast<double>(c.profile.max_ad))};
}

BoundReport induced_subgraph_bound(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    auto c = spectral_context(g);
    if (!c.profile.ad_regular)
        throw std::invalid_argument("induced-subgraph bound requires an AD-regular graph");
    const int n = g.vertex_count();
    for (int v : subset)
        if (v < 0 || v >= n) throw std::invalid_argument("subset vertex out of range");
    std::int64_t weight = 0;  // sum of AD entries within the subset
    for (int u : subset)
        for (int v : subset)
            if (u != v) weight += c.ad(u, v);
    const double mean_sub = static_cast<double>(weight) / static_cast<double>(subset.size());
    const double r = static_cast<double>(c.profile.max_ad);
    const double lambda_n = c.spec.lambda_min();
    const double n1 = static_cast<double>(subset.size());
    return make_bound("induced_mean_ad", n1 * (r - lambda_n) / n + lambda_n, mean_sub);
}

BoundReport regular_independence_bound(const Graph& g) {
    auto c = spectral_context(g);
    if (!c.profile.ad_regular)
        throw std::invalid_argument("ratio bound requires an AD-regular graph");
    const int alpha = ad_independence_number(g);
    const double l1 = c.spec.lambda_max(), ln = c.spec.lambda_min();
    return make_bound("regular_independence", alpha,
                      g.vertex_count() * (-ln) / (l1 - ln));
}

BoundReport clique_bound(const Graph& g) {
    if (g.vertex_count() > kCliqueCap)
        throw std::invalid_argument("clique bound capped at 20 vertices");
    auto c = spectral_context(g);
    const double tol = 1e-8 * std::max(1.0, one_norm(c.ad));
    int below = 0, at = 0, above = 0;
    for (int i = 0; i < c.spec.size(); ++i) {
        double v = c.spec.values(i);
        if (v < -1.0 - tol) ++below;
        else if (v > -1.0 + tol) ++above;
        else ++at;
    }
    const double m_candidates[3] = {static_cast<double>(at + below + 1),
                                    static_cast<double>(at + above),
                                    std::floor(1.0 + c.spec.lambda_max() + tol)};
    double m = std::min({m_candidates[0], m_candidates[1], m_candidates[2]});
    // Refinement: when the minimum is t0 + t- + 1 and more than t0 + t-
    // eigenvalues exceed -1, the bound drops by one.
    if (m == m_candidates[0] && above > at + below) m -= 1.0;
    const int omega = max_clique(g);
    return make_bound("clique", omega, m);
}

}  // namespace adm
