#include "minorsign/minors.hpp"

#include <sstream>
#include <stdexcept>

namespace minorsign {

std::uint32_t IndexSet::mask() const {
    std::uint32_t m = 0;
    for (int i : indices) m |= 1u << (i - 1);
    return m;
}

std::vector<int> IndexSet::zero_based() const {
    std::vector<int> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(i - 1);
    return out;
}

IndexSet IndexSet::from_mask(std::uint32_t mask) {
    IndexSet s;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) s.indices.push_back(i + 1);
    return s;
}

IndexSet IndexSet::full(int n) {
    IndexSet s;
    s.indices.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.indices[static_cast<size_t>(i)] = i + 1;
    return s;
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    os << "{";
    for (size_t i = 0; i < s.indices.size(); ++i) os << (i ? "," : "") << s.indices[i];
    return os << "}";
}

std::vector<Rational> CharPoly::minor_sums() const {
    std::vector<Rational> e;
    e.reserve(coeffs.size() - 1);
    for (int k = 1; k <= degree(); ++k) e.push_back(k % 2 == 0 ? a(k) : -a(k));
    return e;
}

const Rational& MinorTable::minor(const IndexSet& s) const { return minor(s.mask()); }

const Rational& MinorTable::minor(std::uint32_t mask) const {
    auto it = by_mask_.find(mask);
    if (it == by_mask_.end()) throw std::out_of_range("index set not in minor table");
    return entries[it->second].second;
}

MinorEvaluator::MinorEvaluator(const Matrix& a) : n_(a.n()) {
    scaled_.resize(static_cast<size_t>(n_) * n_);
    row_scale_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < n_; ++j) {
            mpz_class f;
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), a.at(i, j).denominator().get_mpz_t());
            scaled_[static_cast<size_t>(i) * n_ + j] = a.at(i, j).numerator() * f;
        }
        row_scale_[static_cast<size_t>(i)] = l;
    }
}

namespace {

mpz_class bareiss_det_subset(const std::vector<mpz_class>& src, int n, std::span<const int> rows) {
    int k = static_cast<int>(rows.size());
    std::vector<mpz_class> a(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[static_cast<size_t>(i) * k + j] = src[static_cast<size_t>(rows[i]) * n + rows[j]];
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * k + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (int p = 0; p + 1 < k; ++p) {
        if (sgn(at(p, p)) == 0) {
            int swap_row = -1;
            for (int r = p + 1; r < k; ++r)
                if (sgn(at(r, p)) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < k; ++j) std::swap(at(p, j), at(swap_row, j));
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j) {
                mpz_class num = at(i, j) * at(p, p) - at(i, p) * at(p, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, p) = 0;
        }
        prev = at(p, p);
    }
    return sign > 0 ? at(k - 1, k - 1) : mpz_class(-at(k - 1, k - 1));
}

}  // namespace

Rational MinorEvaluator::minor(std::span<const int> rows) const {
    for (int r : rows)
        if (r < 0 || r >= n_) throw std::out_of_range("minor index out of range");
    mpz_class d = bareiss_det_subset(scaled_, n_, rows);
    mpz_class scale = 1;
    for (int r : rows) scale *= row_scale_[static_cast<size_t>(r)];
    return Rational(d, scale);
}

Rational principal_minor(const Matrix& a, const IndexSet& s) {
    if (s.indices.empty()) throw std::out_of_range("empty index set");
    for (size_t i = 0; i < s.indices.size(); ++i) {
        int v = s.indices[i];
        if (v < 1 || v > a.n()) throw std::out_of_range("principal minor index out of range");
        if (i > 0 && s.indices[i - 1] >= v) throw std::out_of_range("index set not strictly increasing");
    }
    auto rows = s.zero_based();
    return MinorEvaluator(a).minor(rows);
}

MinorTable all_principal_minors(const Matrix& a, int cap) {
    if (cap < 1 || cap > max_minor_cap)
        throw std::invalid_argument("minor cap must be between 1 and " + std::to_string(max_minor_cap));
    int n = a.n();
    if (n > cap) throw capacity_error(n, cap);

    MinorEvaluator eval(a);
    MinorTable table;
    table.n = n;
    table.entries.reserve((1u << n) - 1);
    table.sums.assign(static_cast<size_t>(n), Rational(0));

    // Fixed-popcount masks in increasing numeric order are exactly the
    // colexicographic order of the k-subsets.
    std::vector<int> rows;
    for (int k = 1; k <= n; ++k) {
        std::uint32_t mask = (1u << k) - 1;
        std::uint32_t limit = 1u << n;
        while (mask < limit) {
            rows.clear();
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) rows.push_back(b);
            Rational value = eval.minor(rows);
            table.sums[static_cast<size_t>(k - 1)] += value;
            table.by_mask_[mask] = table.entries.size();
            table.entries.emplace_back(IndexSet::from_mask(mask), std::move(value));
            // Gosper's hack: next mask with the same popcount.
            std::uint32_t c = mask & (0u - mask);
            std::uint32_t r = mask + c;
            if (c == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return table;
}

CharPoly char_poly_from_minors(const MinorTable& table) {
    CharPoly cp;
    cp.coeffs.assign(static_cast<size_t>(table.n) + 1, Rational(0));
    cp.coeffs[0] = 1;
    for (int k = 1; k <= table.n; ++k) {
        const Rational& ek = table.sums[static_cast<size_t>(k - 1)];
        cp.coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? ek : -ek;
    }
    return cp;
}

CharPoly char_poly_faddeev(const Matrix& a) {
    int n = a.n();
    CharPoly cp;
    cp.coeffs.assign(static_cast<size_t>(n) + 1, Rational(0));
    cp.coeffs[0] = 1;
    Matrix m = Matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        Matrix am = a * m;
        Rational ak = -(am.trace() / Rational(k));
        cp.coeffs[static_cast<size_t>(k)] = ak;
        if (k < n) m = am + ak * Matrix::identity(n);
    }
    return cp;
}

std::vector<Rational> minor_sums(const Matrix& a) { return char_poly_faddeev(a).minor_sums(); }

}  // namespace minorsign
