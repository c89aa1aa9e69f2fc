#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "minorsign/errors.hpp"
#include "minorsign/matrix.hpp"
#include "minorsign/polynomial.hpp"

namespace minorsign {

// Enumerating all 2^n - 1 principal minors above this dimension is refused
// unless the caller raises the cap. Overridable per call; the CLI also honors
// MINORSIGN_CAP. Caps above 30 are rejected outright (the bitmask index and
// the subset count both stop making sense long before that).
inline constexpr int default_minor_cap = 12;
inline constexpr int max_minor_cap = 30;

// Nonempty set of 1-based row/column indices, strictly increasing.
struct IndexSet {
    std::vector<int> indices;

    int k() const { return static_cast<int>(indices.size()); }
    std::uint32_t mask() const;                 // bit i-1 set for index i
    std::vector<int> zero_based() const;

    static IndexSet from_mask(std::uint32_t mask);
    static IndexSet full(int n);

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.indices == b.indices; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.indices < b.indices; }

    std::string str() const;  // "{1,3}"
};

std::ostream& operator<<(std::ostream& os, const IndexSet& s);

// Monic characteristic polynomial det(xI - A), kept as the coefficient
// vector a_0 = 1, a_1, ..., a_n. a_k = (-1)^k E_k(A).
struct CharPoly {
    std::vector<Rational> coeffs;  // size n+1, coeffs[0] == 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& a(int k) const { return coeffs.at(static_cast<size_t>(k)); }
    Polynomial as_polynomial() const { return Polynomial(coeffs); }
    std::vector<Rational> minor_sums() const;  // E_1..E_n recovered from the coefficients

    friend bool operator==(const CharPoly& x, const CharPoly& y) { return x.coeffs == y.coeffs; }
    friend bool operator!=(const CharPoly& x, const CharPoly& y) { return !(x == y); }
};

// All 2^n - 1 principal minors plus the sums E_1..E_n. Entries are ordered
// by cardinality, colexicographically within each cardinality, so the table
// and the streaming E_k accumulation are reproducible.
struct MinorTable {
    int n = 0;
    std::vector<std::pair<IndexSet, Rational>> entries;
    std::vector<Rational> sums;  // sums[k-1] = E_k

    const Rational& minor(const IndexSet& s) const;
    const Rational& minor(std::uint32_t mask) const;

private:
    friend MinorTable all_principal_minors(const Matrix&, int);
    std::unordered_map<std::uint32_t, size_t> by_mask_;
};

// Row-scaled integer form of a matrix; every principal minor costs one
// fraction-free integer elimination instead of a rational one.
class MinorEvaluator {
public:
    explicit MinorEvaluator(const Matrix& a);
    Rational minor(std::span<const int> zero_based_sorted) const;
    int n() const { return n_; }

private:
    int n_;
    std::vector<mpz_class> scaled_;
    std::vector<mpz_class> row_scale_;
};

Rational principal_minor(const Matrix& a, const IndexSet& s);  // throws std::out_of_range
MinorTable all_principal_minors(const Matrix& a, int cap = default_minor_cap);  // throws capacity_error

CharPoly char_poly_from_minors(const MinorTable& table);

// Independent route to the same coefficients: the Faddeev-LeVerrier
// recurrence M_0 = I, a_k = -tr(A M_{k-1})/k, M_k = A M_{k-1} + a_k I.
// No dimension cap.
CharPoly char_poly_faddeev(const Matrix& a);

// E_1..E_n without enumerating minors (inverts a_k = (-1)^k E_k).
std::vector<Rational> minor_sums(const Matrix& a);

}  // namespace minorsign
