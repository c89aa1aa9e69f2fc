#pragma once

#include <functional>
#include <vector>

#include "minorsign/generate.hpp"
#include "minorsign/matrix.hpp"
#include "minorsign/polynomial.hpp"

// Test-only oracles, independent of the library's computation paths.
namespace oracles {

using minorsign::Matrix;
using minorsign::Polynomial;
using minorsign::Rational;

// Laplace cofactor expansion along the first row. Exponential; n <= 4 in tests.
inline Rational cofactor_det(const Matrix& m) {
    int n = m.n();
    if (n == 1) return m.at(0, 0);
    Rational acc;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<Rational> sub;
        sub.reserve(static_cast<size_t>(n - 1) * (n - 1));
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != j) sub.push_back(m.at(r, c));
        Rational term = m.at(0, j) * cofactor_det(Matrix(n - 1, std::move(sub)));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// det(xI - A) expanded with polynomial-entry cofactor expansion.
inline Polynomial char_poly_direct(const Matrix& m) {
    int n = m.n();
    std::vector<std::vector<Polynomial>> p(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> coeffs;
            if (i == j) coeffs = {1, -m.at(i, j)};
            else coeffs = {-m.at(i, j)};
            p[static_cast<size_t>(i)][static_cast<size_t>(j)] = Polynomial(coeffs);
        }
    // recursive expansion on the polynomial matrix
    std::function<Polynomial(const std::vector<std::vector<Polynomial>>&)> det =
        [&](const std::vector<std::vector<Polynomial>>& a) -> Polynomial {
        size_t k = a.size();
        if (k == 1) return a[0][0];
        Polynomial acc;
        for (size_t j = 0; j < k; ++j) {
            std::vector<std::vector<Polynomial>> sub;
            for (size_t r = 1; r < k; ++r) {
                std::vector<Polynomial> row;
                for (size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(a[r][c]);
                sub.push_back(std::move(row));
            }
            Polynomial term = a[0][j] * det(sub);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(p);
}

// Seeded random rational matrix: integer entries in [-9, 9], roughly one in
// five entries gets a denominator in [2, 9].
inline Matrix random_rational_matrix(int n, minorsign::SplitMix64& rng, bool symmetric = false) {
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                flat[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
                continue;
            }
            long num = rng.next_in(-9, 9);
            long den = rng.next_in(0, 4) == 0 ? rng.next_in(2, 9) : 1;
            flat[static_cast<size_t>(i) * n + j] = Rational(num, den);
        }
    return Matrix(n, std::move(flat));
}

}  // namespace oracles
