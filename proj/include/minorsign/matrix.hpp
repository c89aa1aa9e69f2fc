#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "minorsign/rational.hpp"

namespace minorsign {

// Dense square matrix of exact rationals. Immutable after construction;
// the symmetry flag is recomputed from the entries, never trusted.
class Matrix {
public:
    explicit Matrix(int n);  // zero matrix
    Matrix(int n, std::vector<Rational> row_major);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix build(int n, const std::function<Rational(int, int)>& entry);

    int n() const { return n_; }
    bool symmetric() const { return symmetric_; }

    const Rational& at(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return e_[static_cast<size_t>(i) * n_ + j];
    }

    Rational trace() const;
    Matrix transpose() const;

    // Principal submatrix on the given sorted 0-based indices.
    Matrix submatrix(const std::vector<int>& rows) const;

    // Exact inverse; nullopt when singular.
    std::optional<Matrix> inverse() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& a);

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int n_;
    std::vector<Rational> e_;
    bool symmetric_;

    void recompute_symmetric();
};

// Exact determinant via fraction-free (Bareiss) elimination after clearing
// row denominators.
Rational determinant(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace minorsign
