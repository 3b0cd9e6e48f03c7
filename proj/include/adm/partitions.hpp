#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "adm/charpoly.hpp"
#include "adm/graph.hpp"

namespace adm {

// Hard cap for exhaustive partition enumeration; the number of spanning
// elementary subgraphs grows superexponentially.
inline constexpr int kPartitionCap = 12;

enum class ADBlockKind { AdjacentPair, AntipodalPair, Cycle };

struct ADBlock {
    ADBlockKind kind;
    std::vector<int> vertices;  // cyclic order for Cycle blocks
};

// Partition of a vertex subset into adjacent/antipodal pairs and
// adjacency-diametrical cycles, with the bookkeeping counts of the
// determinant formula.
struct ADPartition {
    std::vector<ADBlock> blocks;
    int pairs = 0;               // p: number of size-2 blocks
    int cycles = 0;              // p1: number of cycle blocks
    int antipodal_pairs = 0;     // a: antipodal size-2 blocks
    int antipodal_in_cycles = 0; // a1: antipodal consecutive relations in cycles
    int covered = 0;             // number of vertices covered
};

// Visits every adjacency-diametrical partition covering exactly k vertices,
// each exactly once.  Two partitions with the same blocks but distinct cyclic
// structures on a block are distinct (they correspond to distinct elementary
// subgraphs of the weighted view).  The ADPartition reference is only valid
// during the callback.
void enumerate_ad_partitions(const Graph& g, int k,
                             const std::function<void(const ADPartition&)>& visit);

std::vector<ADPartition> ad_partitions(const Graph& g, int k);

// Spanning-partition expansion of det(AD(G)):
//   sum of (-1)^(n-p-p1) 2^p1 d^(2a+a1) over spanning partitions.
BigInt det_via_partitions(const Graph& g);

// Coefficient c_k of the AD characteristic polynomial by enumeration:
//   sum of (-1)^(p+p1) 2^p1 d^(2a+a1) over partitions with k vertices.
BigInt charpoly_coeff_via_partitions(const Graph& g, int k);
std::vector<BigInt> charpoly_coeffs_via_partitions(const Graph& g);  // c_0..c_n

// c_2 = -(|E| + k d^2), k = number of antipodal pairs.
BigInt c2_closed(const Graph& g);

// c_3 = -2 (k_0 + k_1 d + k_2 d^2 + k_3 d^3), k_s = number of triples with
// exactly s antipodal pairs and 3-s adjacent pairs.
BigInt c3_closed(const Graph& g);

// Number of adjacency-diametrical cycles of the given length, i.e. cycles of
// that length in the weighted view.
std::int64_t enumerate_ad_cycles(const Graph& g, int length);

struct OddCycleReport {
    int length = 0;  // smallest odd degree-index with nonzero coefficient
    BigInt count;    // -c_length / 2
};

// Reads the odd coefficients of an AD characteristic polynomial: the first
// nonzero one reports a cycle count; nullopt when all vanish (no odd
// adjacency-diametrical cycles).
std::optional<OddCycleReport> odd_ad_cycle_count_from_coeffs(const CharPoly& cp);

// Bipartite with odd diameter (equivalently: no two vertices of a part are
// antipodal).
bool is_diametrical_bipartite(const Graph& g);

// The definition checked literally on the bipartition; used to cross-check
// the odd-diameter shortcut.
bool is_diametrical_bipartite_definitional(const Graph& g);

}  // namespace adm
