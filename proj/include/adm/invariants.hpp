#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adm/graph.hpp"
#include "adm/matrices.hpp"
#include "adm/spectrum.hpp"

namespace adm {

inline constexpr int kIndependenceCap = 24;
inline constexpr int kChromaticCap = 16;
inline constexpr int kCliqueCap = 20;

// Per-vertex degree, diametrical degree and AD degree, with aggregates.
// At diameter 1 the diametrical degrees are 0 by convention (AD = A).
struct DegreeProfile {
    std::vector<int> degree;
    std::vector<int> diametrical_degree;
    std::vector<std::int64_t> ad_degree;  // deg(v) + d * ddeg(v)
    std::int64_t diametrical_degree_sum = 0;
    int min_diametrical = 0, max_diametrical = 0;
    std::int64_t min_ad = 0, max_ad = 0;
    double mean_ad = 0.0;
    bool ad_regular = false;
};

DegreeProfile degree_profile(const Graph& g);

struct BoundReport {
    std::string name;
    double left = 0;
    double right = 0;
    bool holds = false;
    double gap = 0;  // right - left
};

BoundReport make_bound(std::string name, double left, double right);

// --- exact solvers (bitset branch and bound; desk-scale graphs) ---

int max_clique(const Graph& g);
int max_independent_set(const Graph& g);
int chromatic_number_exact(const Graph& g);

// Independence/chromatic numbers of the adjacent-or-antipodal relation.
int ad_independence_number(const Graph& g);  // n <= kIndependenceCap
int ad_chromatic_number(const Graph& g);     // n <= kChromaticCap

// --- spectral bound checkers ---

// {sum of eigenvalues ~ 0, exact second-moment identity 2m + d^2 dhat(G)}.
std::array<BoundReport, 2> trace_moment_check(const Graph& g);

// lambda_1 <= sqrt((n-1)/n (2m + d^2 dhat)).
BoundReport spectral_radius_bound(const Graph& g);

// For diametrical bipartite graphs: |lambda_n| <= sqrt(m + d^2 dhat / 2)
// (proof-level form), plus the literal stated form on lambda_n itself.
std::array<BoundReport, 2> bipartite_least_eig_bound(const Graph& g);

// alpha_AD <= min{n - n+, n - n-}.
BoundReport inertia_bound(const Graph& g);

// chi_AD >= 1 - lambda_1 / lambda_n.
BoundReport chromatic_lower_bound(const Graph& g);

// lambda_1 <= -3 lambda_n for planar graphs with chi == chi_AD; nullopt when
// the chi precondition fails (not applicable).  The caller asserts planarity.
std::optional<BoundReport> planar_fourcolor_check(const Graph& g, bool planar_assertion);

// min AD degree <= mean AD degree <= lambda_1 <= max AD degree (three links).
std::vector<BoundReport> mean_degree_sandwich(const Graph& g);

// n1 (r - lambda_n)/n + lambda_n <= mean AD degree of the sub-object induced
// on subset (weights inherited from the full graph); requires AD-regular g.
BoundReport induced_subgraph_bound(const Graph& g, const std::vector<int>& subset);

// alpha_AD <= n (-lambda_n) / (lambda_1 - lambda_n); requires AD-regular g.
BoundReport regular_independence_bound(const Graph& g);

// omega(G) <= min{t0 + t- + 1, t0 + t+, 1 + lambda_1}, counting eigenvalues
// against -1; the refinement clause tightens to m - 1.
BoundReport clique_bound(const Graph& g);

}  // namespace adm
