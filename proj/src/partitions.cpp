#include "adm/partitions.hpp"

#include <bit>
#include <stdexcept>

#include "adm/matrices.hpp"

namespace adm {

namespace {

BigInt power(std::int64_t base, unsigned exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return out;
}

// Shared recursive enumerator over the weighted view.  Every partition is
// produced exactly once: vertices are decided in increasing order, and each
// block is placed when its minimum vertex is reached.  Cycle blocks are
// oriented by requiring the first path vertex to be smaller than the last,
// so each cycle subgraph appears once.
struct Enumerator {
    int n = 0;
    int target = -1;  // exact covered count, or -1 to visit every partition
    std::vector<std::uint32_t> nb;    // adjacent-or-antipodal
    std::vector<std::uint32_t> anti;  // antipodal only
    std::uint32_t undecided = 0;
    ADPartition part;
    std::vector<int> path;
    const std::function<void(const ADPartition&)>* visit = nullptr;

    Enumerator(const Graph& g, const DistanceMatrix& dm) {
        n = g.vertex_count();
        if (n > kPartitionCap)
            throw std::invalid_argument("partition enumeration capped at 12 vertices");
        nb.assign(static_cast<size_t>(n), 0);
        anti.assign(static_cast<size_t>(n), 0);
        const int d = dm.diameter;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if (dm.dist(u, v) == 1)
                    nb[static_cast<size_t>(u)] |= 1u << v;
                else if (dm.dist(u, v) == d && d >= 2) {
                    nb[static_cast<size_t>(u)] |= 1u << v;
                    anti[static_cast<size_t>(u)] |= 1u << v;
                }
            }
        undecided = (1u << n) - 1;
    }

    bool antipodal(int u, int v) const { return (anti[static_cast<size_t>(u)] >> v) & 1u; }

    void run() { rec(); }

    void rec() {
        if (target >= 0 && part.covered == target) {
            (*visit)(part);
            return;
        }
        if (undecided == 0) {
            if (target < 0) (*visit)(part);
            return;
        }
        if (target >= 0 && part.covered + std::popcount(undecided) < target) return;

        const int v = std::countr_zero(undecided);
        const std::uint32_t saved = undecided;
        const std::uint32_t rest = undecided & (undecided - 1);  // clear lowest bit

        // v stays uncovered
        undecided = rest;
        rec();

        // pair block {v, w}
        if (target < 0 || part.covered + 2 <= target) {
            for (std::uint32_t cand = nb[static_cast<size_t>(v)] & rest; cand;
                 cand &= cand - 1) {
                const int w = std::countr_zero(cand);
                const bool ap = antipodal(v, w);
                undecided = rest & ~(1u << w);
                part.blocks.push_back(
                    {ap ? ADBlockKind::AntipodalPair : ADBlockKind::AdjacentPair, {v, w}});
                ++part.pairs;
                part.antipodal_pairs += ap;
                part.covered += 2;
                rec();
                part.covered -= 2;
                part.antipodal_pairs -= ap;
                --part.pairs;
                part.blocks.pop_back();
            }
        }

        // cycle block with minimum vertex v
        path.assign(1, v);
        undecided = rest;
        extend_cycle(v, rest, 0);
        path.clear();

        undecided = saved;
    }

    // Grows a path v, x1, ..., xj through undecided vertices; closes it into
    // a cycle whenever the last vertex neighbors v (length >= 3, x1 < xj).
    void extend_cycle(int last, std::uint32_t avail, int anti_on_path) {
        const int budget = (target < 0 ? n : target) - part.covered;
        if (static_cast<int>(path.size()) >= budget) return;
        for (std::uint32_t cand = nb[static_cast<size_t>(last)] & avail; cand;
             cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            const int anti_next = anti_on_path + antipodal(last, w);
            path.push_back(w);
            if (path.size() >= 3 && (nb[static_cast<size_t>(w)] >> path[0] & 1u) &&
                path[1] < w) {
                const int len = static_cast<int>(path.size());
                const int a1 = anti_next + antipodal(w, path[0]);
                const std::uint32_t saved = undecided;
                std::uint32_t mask = 0;
                for (int x : path) mask |= 1u << x;
                undecided = saved & ~mask;
                part.blocks.push_back({ADBlockKind::Cycle, path});
                ++part.cycles;
                part.antipodal_in_cycles += a1;
                part.covered += len;
                rec();
                part.covered -= len;
                part.antipodal_in_cycles -= a1;
                --part.cycles;
                part.blocks.pop_back();
                undecided = saved;
            }
            extend_cycle(w, avail & ~(1u << w), anti_next);
            path.pop_back();
        }
    }
};

}  // namespace

void enumerate_ad_partitions(const Graph& g, int k,
                             const std::function<void(const ADPartition&)>& visit) {
    const int n = g.vertex_count();
    if (k < 2 || k > n)
        throw std::invalid_argument("partition enumeration requires 2 <= k <= n");
    Enumerator e(g, all_pairs_distances(g));
    e.target = k;
    e.visit = &visit;
    e.run();
}

std::vector<ADPartition> ad_partitions(const Graph& g, int k) {
    std::vector<ADPartition> out;
    enumerate_ad_partitions(g, k, [&](const ADPartition& p) { out.push_back(p); });
    return out;
}

BigInt det_via_partitions(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("determinant expansion requires n >= 2");
    auto dm = all_pairs_distances(g);
    const std::int64_t d = dm.diameter;
    BigInt sum = 0;
    Enumerator e(g, dm);
    e.target = n;
    std::function<void(const ADPartition&)> add = [&](const ADPartition& p) {
        BigInt term = power(2, static_cast<unsigned>(p.cycles)) *
                      power(d, static_cast<unsigned>(2 * p.antipodal_pairs +
                                                     p.antipodal_in_cycles));
        if ((n - p.pairs - p.cycles) % 2 != 0) term = -term;
        sum += term;
    };
    e.visit = &add;
    e.run();
    return sum;
}

std::vector<BigInt> charpoly_coeffs_via_partitions(const Graph& g) {
    const int n = g.vertex_count();
    auto dm = all_pairs_distances(g);
    const std::int64_t d = dm.diameter;
    std::vector<BigInt> sums(static_cast<size_t>(n) + 1, BigInt(0));
    Enumerator e(g, dm);
    e.target = -1;
    std::function<void(const ADPartition&)> add = [&](const ADPartition& p) {
        BigInt term = power(2, static_cast<unsigned>(p.cycles)) *
                      power(d, static_cast<unsigned>(2 * p.antipodal_pairs +
                                                     p.antipodal_in_cycles));
        if ((p.pairs + p.cycles) % 2 != 0) term = -term;
        sums[static_cast<size_t>(p.covered)] += term;
    };
    e.visit = &add;
    e.run();
    return sums;  // sums[0] == 1 from the empty partition
}

BigInt charpoly_coeff_via_partitions(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        throw std::invalid_argument("coefficient index out of range");
    if (k == 1) return 0;  // no block has fewer than two vertices
    auto dm = all_pairs_distances(g);
    const std::int64_t d = dm.diameter;
    BigInt sum = 0;
    Enumerator e(g, dm);
    e.target = k;
    std::function<void(const ADPartition&)> add = [&](const ADPartition& p) {
        BigInt term = power(2, static_cast<unsigned>(p.cycles)) *
                      power(d, static_cast<unsigned>(2 * p.antipodal_pairs +
                                                     p.antipodal_in_cycles));
        if ((p.pairs + p.cycles) % 2 != 0) term = -term;
        sum += term;
    };
    e.visit = &add;
    e.run();
    return sum;
}

BigInt c2_closed(const Graph& g) {
    auto dm = all_pairs_distances(g);
    const int n = g.vertex_count();
    const std::int64_t d = dm.diameter;
    std::int64_t antipodal = 0;
    if (d >= 2)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (dm.dist(u, v) == d) ++antipodal;
    return -(BigInt(g.edge_count()) + BigInt(antipodal) * d * d);
}

BigInt c3_closed(const Graph& g) {
    auto dm = all_pairs_distances(g);
    const int n = g.vertex_count();
    const int d = dm.diameter;
    auto relation = [&](int u, int v) -> int {
        // 0 = adjacent, 1 = antipodal, -1 = neither
        int dist = dm.dist(u, v);
        if (dist == d && d >= 2) return 1;
        if (dist == 1) return 0;
        return -1;
    };
    std::int64_t k[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int rij = relation(i, j);
            if (rij < 0) continue;
            for (int l = j + 1; l < n; ++l) {
                int ril = relation(i, l), rjl = relation(j, l);
                if (ril < 0 || rjl < 0) continue;
                ++k[rij + ril + rjl];
            }
        }
    BigInt sum = 0;
    BigInt dp = 1;
    for (int s = 0; s < 4; ++s) {
        sum += k[s] * dp;
        dp *= d;
    }
    return -2 * sum;
}

std::int64_t enumerate_ad_cycles(const Graph& g, int length) {
    const int n = g.vertex_count();
    if (length < 3 || length > n)
        throw std::invalid_argument("cycle length must satisfy 3 <= length <= n");
    if (n > kPartitionCap)
        throw std::invalid_argument("cycle enumeration capped at 12 vertices");
    auto dm = all_pairs_distances(g);
    const int d = dm.diameter;
    std::vector<std::uint32_t> nb(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (dm.dist(u, v) == 1 || (dm.dist(u, v) == d && d >= 2)))
                nb[static_cast<size_t>(u)] |= 1u << v;

    std::int64_t count = 0;
    // Paths rooted at the cycle's minimum vertex; orientation fixed by
    // second-vertex < last-vertex.
    std::vector<int> path;
    std::function<void(int, std::uint32_t)> dfs = [&](int last, std::uint32_t avail) {
        if (static_cast<int>(path.size()) == length) {
            if ((nb[static_cast<size_t>(last)] >> path[0] & 1u) && path[1] < last) ++count;
            return;
        }
        for (std::uint32_t cand = nb[static_cast<size_t>(last)] & avail; cand;
             cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            path.push_back(w);
            dfs(w, avail & ~(1u << w));
            path.pop_back();
        }
    };
    for (int v = 0; v + length <= n; ++v) {
        std::uint32_t avail = 0;
        for (int w = v + 1; w < n; ++w) avail |= 1u << w;
        path.assign(1, v);
        dfs(v, avail);
    }
    return count;
}

std::optional<OddCycleReport> odd_ad_cycle_count_from_coeffs(const CharPoly& cp) {
    for (int k = 3; k <= cp.degree(); k += 2) {
        const BigInt& c = cp.coeff(k);
        if (c == 0) continue;
        if (c > 0 || c % 2 != 0)
            throw std::logic_error("odd coefficient fails cycle-count sanity: c_" +
                                   std::to_string(k) + " = " + c.get_str());
        OddCycleReport r;
        r.length = k;
        r.count = -c / 2;
        return r;
    }
    return std::nullopt;
}

bool is_diametrical_bipartite(const Graph& g) {
    auto dm = all_pairs_distances(g);
    if (!bipartition(g)) return false;
    return dm.diameter % 2 == 1;
}

bool is_diametrical_bipartite_definitional(const Graph& g) {
    auto dm = all_pairs_distances(g);
    auto parts = bipartition(g);
    if (!parts) return false;
    auto same_part_antipodal = [&](const std::vector<int>& part) {
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (dm.dist(part[i], part[j]) == dm.diameter) return true;
        return false;
    };
    return !same_part_antipodal(parts->first) && !same_part_antipodal(parts->second);
}

}  // namespace adm
