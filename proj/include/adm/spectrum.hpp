#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "adm/graph.hpp"
#include "adm/matrices.hpp"

namespace adm {

inline constexpr double kSpectrumTol = 1e-9;

// Real eigenvalue multiset, sorted descending.
struct Spectrum {
    Eigen::VectorXd values;
    double tol = kSpectrumTol;

    int size() const { return static_cast<int>(values.size()); }
    double lambda_max() const { return values(0); }
    double lambda_min() const { return values(values.size() - 1); }
    double sum() const { return values.sum(); }
};

Spectrum make_spectrum(std::vector<double> values, double tol = kSpectrumTol);

// Dense symmetric eigensolve (orthogonal tridiagonalization + QR);
// asymmetric input is rejected.
Spectrum eigenvalues_sym(const SymIntMatrix& m);
Spectrum eigenvalues_sym(const Eigen::MatrixXd& m);

// Greedy multiset comparison: sort both, compare pairwise within tol.
bool multiset_close(const Spectrum& a, const Spectrum& b, double tol);
double multiset_max_gap(const Spectrum& a, const Spectrum& b);  // inf if sizes differ

// AD-spectrum of a cycle by the parity-split trigonometric form; n >= 4.
// n = 3 is rejected: the triangle has diameter 1, where the AD matrix is the
// plain adjacency matrix and the formula does not apply.
Spectrum cycle_spectrum_closed(int n);

struct IntersectionArray {
    std::vector<int> b;  // b_0 .. b_{d-1}
    std::vector<int> c;  // c_1 .. c_d
    bool operator==(const IntersectionArray&) const = default;
};

// Intersection array if the graph is distance-regular, nullopt otherwise
// (also for non-regular input).
std::optional<IntersectionArray> is_distance_regular(const Graph& g);

// Eigenvalue of A(G) paired with the eigenvalue of A_d(G) on the same
// eigenvector.
struct CoEigenPair {
    double lambda = 0;  // eigenvalue of A(G)
    double gamma = 0;   // co-eigenvalue of A_d(G)
    Eigen::VectorXd vec;
};

// Requires a distance-regular graph with diameter >= 2 (A_d is then a
// polynomial in A, so every eigenvector of A is an eigenvector of A_d).
// Each pair is residual-checked to 1e-7 * ||A_d||_1.
std::vector<CoEigenPair> co_eigenpairs(const Graph& g);

}  // namespace adm
