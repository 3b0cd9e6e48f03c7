#include "adm/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace adm {

double CharPoly::evaluate(double x) const {
    double acc = 0.0;
    for (const auto& c : coeffs) acc = acc * x + c.get_d();
    return acc;
}

std::string CharPoly::to_string() const {
    const int n = degree();
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= n; ++k) {
        const BigInt& c = coeffs[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int p = n - k;
        if (mag != 1 || p == 0) out << mag.get_str();
        if (p > 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (p > 1) out << "^" << p;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::vector<std::string> CharPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
}

CharPoly char_poly_exact(const SymIntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return CharPoly{{BigInt(1)}};

    // Berkowitz: grow the polynomial of the leading principal submatrix one
    // row/column at a time via a Toeplitz multiplication.
    std::vector<BigInt> p{BigInt(1), BigInt(-m(0, 0))};
    std::vector<BigInt> v, mv, t;
    for (int k = 2; k <= n; ++k) {
        const int r = k - 1;
        t.assign(static_cast<size_t>(k) + 1, BigInt(0));
        t[0] = 1;
        t[1] = -m(r, r);
        v.assign(static_cast<size_t>(r), BigInt(0));
        for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = m(i, r);
        for (int j = 2; j <= k; ++j) {
            BigInt dot = 0;
            for (int i = 0; i < r; ++i) dot += m(r, i) * v[static_cast<size_t>(i)];
            t[static_cast<size_t>(j)] = -dot;
            if (j == k) break;
            mv.assign(static_cast<size_t>(r), BigInt(0));
            for (int i = 0; i < r; ++i) {
                BigInt acc = 0;
                for (int l = 0; l < r; ++l) acc += m(i, l) * v[static_cast<size_t>(l)];
                mv[static_cast<size_t>(i)] = acc;
            }
            v.swap(mv);
        }
        std::vector<BigInt> next(static_cast<size_t>(k) + 1, BigInt(0));
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j <= i && j < t.size(); ++j)
                if (i - j < p.size()) next[i] += t[j] * p[i - j];
        p.swap(next);
    }
    return CharPoly{std::move(p)};
}

BigInt determinant_exact(const SymIntMatrix& m) {
    CharPoly cp = char_poly_exact(m);
    BigInt det = cp.coeffs.back();
    if (cp.degree() % 2 != 0) det = -det;
    return det;
}

CharPoly chebyshev_phi(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_phi requires n >= 0");
    std::vector<BigInt> prev{BigInt(1)};        // phi_0
    if (n == 0) return CharPoly{std::move(prev)};
    std::vector<BigInt> cur{BigInt(1), BigInt(0)};  // phi_1 = x
    for (int k = 2; k <= n; ++k) {
        std::vector<BigInt> next(static_cast<size_t>(k) + 1, BigInt(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i] = cur[i];  // x * phi_{k-1}
        for (size_t i = 0; i < prev.size(); ++i) next[i + 2] -= prev[i];
        prev.swap(cur);
        cur.swap(next);
    }
    return CharPoly{std::move(cur)};
}

CharPoly path_charpoly_closed(int n) {
    if (n < 3)
        throw std::invalid_argument("closed path form requires n >= 3 (n = 2 is x^2 - 1)");
    CharPoly phi_n = chebyshev_phi(n);
    CharPoly phi_n2 = chebyshev_phi(n - 2);
    std::vector<BigInt> out = phi_n.coeffs;
    const BigInt scale = BigInt(n - 1) * (n - 1);
    for (size_t i = 0; i < phi_n2.coeffs.size(); ++i)
        out[i + 2] -= scale * phi_n2.coeffs[i];
    out.back() += 2 * (1 - n);
    return CharPoly{std::move(out)};
}

CharPoly double_star_charpoly_closed(int n1, int n2) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("double star form requires n1, n2 >= 2");
    const int n = n1 + n2;
    std::vector<BigInt> out(static_cast<size_t>(n) + 1, BigInt(0));
    out[0] = 1;
    out[2] = -(BigInt(9) * n1 * n2 - 8 * n1 - 8 * n2 + 8);
    out[4] = 4 * (BigInt(n1) * n2 - n1 - n2 + 1);
    return CharPoly{std::move(out)};
}

}  // namespace adm
