#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "adm/matrices.hpp"

namespace adm {

using BigInt = mpz_class;

// Monic integer characteristic polynomial x^n + c_1 x^{n-1} + ... + c_n,
// stored highest power first (coeffs[0] == 1, coeffs[k] == c_k).
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigInt& coeff(int k) const { return coeffs.at(static_cast<size_t>(k)); }

    double evaluate(double x) const;  // Horner in double precision
    std::string to_string() const;    // e.g. "x^4 - 12*x^2 + 4"
    std::vector<std::string> coeff_strings() const;  // decimal, highest first

    bool operator==(const CharPoly&) const = default;
};

// Division-free exact characteristic polynomial (Berkowitz iteration).
CharPoly char_poly_exact(const SymIntMatrix& m);

// (-1)^n times the constant coefficient.
BigInt determinant_exact(const SymIntMatrix& m);

// Characteristic polynomial of the adjacency matrix of a path:
// phi_0 = 1, phi_1 = x, phi_n = x*phi_{n-1} - phi_{n-2}.
CharPoly chebyshev_phi(int n);

// phi_n - (n-1)^2 phi_{n-2} + 2(1-n), n >= 3.  (n = 2 is x^2 - 1.)
CharPoly path_charpoly_closed(int n);

// x^{n1+n2-4} (x^4 - (9 n1 n2 - 8 n1 - 8 n2 + 8) x^2 + 4 (n1 n2 - n1 - n2 + 1)),
// n1, n2 >= 2.
CharPoly double_star_charpoly_closed(int n1, int n2);

}  // namespace adm
