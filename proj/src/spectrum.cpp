#include "adm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace adm {

Spectrum make_spectrum(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<long>(values.size()));
    s.tol = tol;
    return s;
}

Spectrum eigenvalues_sym(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    if (!m.isApprox(m.transpose(), 1e-12))
        throw std::invalid_argument("symmetric matrix required");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    Eigen::VectorXd v = es.eigenvalues();
    Spectrum s;
    s.values = v.reverse();
    return s;
}

Spectrum eigenvalues_sym(const SymIntMatrix& m) {
    if (m != m.transpose()) throw std::invalid_argument("symmetric matrix required");
    return eigenvalues_sym(Eigen::MatrixXd(m.cast<double>()));
}

bool multiset_close(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (std::abs(a.values(i) - b.values(i)) > tol) return false;
    return true;
}

double multiset_max_gap(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double gap = 0;
    for (int i = 0; i < a.size(); ++i)
        gap = std::max(gap, std::abs(a.values(i) - b.values(i)));
    return gap;
}

Spectrum cycle_spectrum_closed(int n) {
    if (n <= 3)
        throw std::invalid_argument(
            "cycle closed form requires n >= 4 (C_3 has diameter 1, where AD = A)");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(n));
    const double pi = std::numbers::pi;
    for (int k = 1; k <= n; ++k) {
        double base = 2.0 * std::cos(2.0 * pi * k / n);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;  // cos(pi k) exactly
        if (n % 2 == 0)
            values.push_back(base + 0.5 * n * sign);
        else
            values.push_back(base + (n - 1) * sign * std::cos(pi * k / n));
    }
    return make_spectrum(std::move(values));
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
    if (!is_regular(g)) return std::nullopt;
    auto dm = all_pairs_distances(g);
    const int n = g.vertex_count();
    const int d = dm.diameter;
    IntersectionArray ia;
    ia.b.assign(static_cast<size_t>(d), -1);
    ia.c.assign(static_cast<size_t>(d), -1);
    // For u at distance i from v: b_i = #neighbors of u at distance i+1 from v,
    // c_i = #neighbors at distance i-1.  Both must depend on i alone.
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            const int i = dm.dist(v, u);
            int up = 0, down = 0;
            for (int w : g.neighbors(u)) {
                int dw = dm.dist(v, w);
                if (dw == i + 1) ++up;
                else if (dw == i - 1) ++down;
            }
            if (i < d) {
                int& b = ia.b[static_cast<size_t>(i)];
                if (b < 0) b = up;
                else if (b != up) return std::nullopt;
            } else if (up != 0) {
                return std::nullopt;
            }
            if (i > 0) {
                int& c = ia.c[static_cast<size_t>(i) - 1];
                if (c < 0) c = down;
                else if (c != down) return std::nullopt;
            }
        }
    }
    return ia;
}

std::vector<CoEigenPair> co_eigenpairs(const Graph& g) {
    auto dm = all_pairs_distances(g);
    if (dm.diameter < 2)
        throw std::invalid_argument("co-eigenpairs require diameter >= 2");
    if (!is_distance_regular(g))
        throw std::invalid_argument("co-eigenpairs require a distance-regular graph");

    Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
    Eigen::MatrixXd ad = kth_adjacency(dm, dm.diameter).cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

    const double ad_norm = ad.cwiseAbs().colwise().sum().maxCoeff();
    std::vector<CoEigenPair> pairs;
    const int n = g.vertex_count();
    for (int i = n - 1; i >= 0; --i) {  // descending by eigenvalue of A
        CoEigenPair p;
        p.vec = es.eigenvectors().col(i);
        p.lambda = es.eigenvalues()(i);
        Eigen::VectorXd adx = ad * p.vec;
        p.gamma = p.vec.dot(adx) / p.vec.squaredNorm();
        double residual = (adx - p.gamma * p.vec).norm();
        if (residual > 1e-7 * std::max(1.0, ad_norm))
            throw std::runtime_error("co-eigenvalue residual check failed");
        pairs.push_back(std::move(p));
    }
    return pairs;
}

}  // namespace adm
