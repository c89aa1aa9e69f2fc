#pragma once

#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "minorsign/rational.hpp"

namespace minorsign {

// Univariate polynomial over the rationals, coefficients stored highest
// degree first. The empty coefficient vector is the zero polynomial;
// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;  // zero
    explicit Polynomial(std::vector<Rational> coeffs);  // strips leading zeros

    static Polynomial constant(const Rational& c);
    static Polynomial from_roots(std::span<const Rational> roots);  // monic product of (x - r)

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    Rational coeff_of_degree(int d) const;  // 0 outside range
    Rational constant_term() const { return coeff_of_degree(0); }

    Rational eval(const Rational& x) const;  // Horner
    Polynomial negate_variable() const;      // q with q(x) = p(-x)
    Polynomial derivative() const;
    Polynomial monic() const;

    // Scaled by the unique positive rational making the coefficients
    // coprime integers. Signs (hence roots and sign behavior) unchanged.
    Polynomial primitive_part() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator-() const;

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    // Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Rational> c_;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace minorsign
