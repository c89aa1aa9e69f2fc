#include "minorsign/polynomial.hpp"

#include <stdexcept>

namespace minorsign {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial p = constant(1);
    for (const Rational& r : roots) p = p * Polynomial(std::vector<Rational>{1, -r});
    return p;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.front();
}

Rational Polynomial::coeff_of_degree(int d) const {
    if (d < 0 || d > degree()) return 0;
    return c_[static_cast<size_t>(degree() - d)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (const Rational& c : c_) acc = acc * x + c;
    return acc;
}

Polynomial Polynomial::negate_variable() const {
    std::vector<Rational> out = c_;
    int deg = degree();
    for (size_t i = 0; i < out.size(); ++i) {
        int d = deg - static_cast<int>(i);
        if (d % 2 != 0) out[i] = -out[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (degree() <= 0) return Polynomial();
    std::vector<Rational> out;
    out.reserve(c_.size() - 1);
    int deg = degree();
    for (int i = 0; i < deg; ++i) out.push_back(Rational(deg - i) * c_[static_cast<size_t>(i)]);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const Rational& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class num_gcd = 0;
    std::vector<mpz_class> scaled;
    scaled.reserve(c_.size());
    for (const Rational& c : c_) {
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        scaled.push_back(c.numerator() * f);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.back().get_mpz_t());
    }
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (mpz_class& z : scaled) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), z.get_mpz_t(), num_gcd.get_mpz_t());
        out.push_back(Rational(q, mpz_class(1)));
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<Rational> out(n);
    for (size_t i = 0; i < a.c_.size(); ++i) out[n - a.c_.size() + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[n - b.c_.size() + i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const Rational& c : c_) out.push_back(-c);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out;
    out.reserve(p.c_.size());
    for (const Rational& x : p.c_) out.push_back(c * x);
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    int qdeg = a.degree() - b.degree();
    std::vector<Rational> quot(static_cast<size_t>(qdeg) + 1);
    Rational lead_inv = b.leading().inverse();
    for (int i = 0; i <= qdeg; ++i) {
        Rational f = rem[static_cast<size_t>(i)] * lead_inv;
        quot[static_cast<size_t>(i)] = f;
        if (f.is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<size_t>(i) + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    // Primitive-part normalization after each remainder keeps coefficient
    // growth in check; the result is reported monic.
    Polynomial x = a.is_zero() ? a : a.primitive_part();
    Polynomial y = b.is_zero() ? b : b.primitive_part();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive_part();
    }
    return x.is_zero() ? x : x.monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    const auto& c = p.coeffs();
    int deg = p.degree();
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        int d = deg - static_cast<int>(i);
        if (!first) os << (c[i].sign() == Sign::negative ? " - " : " + ");
        else if (c[i].sign() == Sign::negative) os << "-";
        Rational mag = c[i].abs();
        if (d == 0 || mag != Rational(1)) os << mag.str();
        if (d > 0) os << "x" << (d > 1 ? "^" + std::to_string(d) : "");
        first = false;
    }
    return os;
}

}  // namespace minorsign
