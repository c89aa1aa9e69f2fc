#include "minorsign/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace minorsign {

Matrix::Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n), symmetric_(true) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

Matrix::Matrix(int n, std::vector<Rational> row_major) : n_(n), e_(std::move(row_major)), symmetric_(false) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (e_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("matrix entry count does not match dimension");
    recompute_symmetric();
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.e_[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int n = static_cast<int>(rows.size());
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
        for (const auto& x : row) flat.push_back(x);
    }
    return Matrix(n, std::move(flat));
}

Matrix Matrix::build(int n, const std::function<Rational(int, int)>& entry) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(entry(i, j));
    return Matrix(n, std::move(flat));
}

void Matrix::recompute_symmetric() {
    symmetric_ = true;
    for (int i = 0; i < n_ && symmetric_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) {
                symmetric_ = false;
                break;
            }
}

Rational Matrix::trace() const {
    Rational t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    return Matrix::build(n_, [this](int i, int j) { return at(j, i); });
}

Matrix Matrix::submatrix(const std::vector<int>& rows) const {
    int k = static_cast<int>(rows.size());
    for (int r : rows)
        if (r < 0 || r >= n_) throw std::out_of_range("submatrix index out of range");
    Matrix s(k);
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) flat.push_back(at(rows[i], rows[j]));
    return Matrix(k, std::move(flat));
}

std::optional<Matrix> Matrix::inverse() const {
    // Exact Gauss-Jordan on [A | I].
    int n = n_;
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = at(i, j).raw();
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (sgn(aug[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(aug[col], aug[pivot]);
        mpq_class inv = 1 / aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(aug[r][col]) == 0) continue;
            mpq_class f = aug[r][col];
            for (int j = col; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(Rational(aug[i][n + j]));
    return Matrix(n, std::move(flat));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    return Matrix::build(a.n_, [&](int i, int j) { return a.at(i, j) + b.at(i, j); });
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    return Matrix::build(a.n_, [&](int i, int j) { return a.at(i, j) - b.at(i, j); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    return Matrix::build(a.n_, [&](int i, int j) {
        Rational s;
        for (int k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
        return s;
    });
}

Matrix operator*(const Rational& c, const Matrix& a) {
    return Matrix::build(a.n_, [&](int i, int j) { return c * a.at(i, j); });
}

namespace {

// Fraction-free elimination on an integer matrix; each division is exact.
mpz_class bareiss_det(std::vector<mpz_class>& a, int n) {
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (sgn(at(r, k)) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : mpz_class(-at(n - 1, n - 1));
}

}  // namespace

Rational determinant(const Matrix& m) {
    int n = m.n();
    // Scale each row to integers; det picks up the product of row scales.
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpz_class f;
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
            a[static_cast<size_t>(i) * n + j] = m.at(i, j).numerator() * f;
        }
        scale *= l;
    }
    mpz_class d = bareiss_det(a, n);
    return Rational(d, scale);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int i = 0; i < m.n(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.n(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

}  // namespace minorsign
