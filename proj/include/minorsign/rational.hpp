#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minorsign {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_from_int(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline int sign_int(Sign s) { return static_cast<int>(s); }

inline Sign operator-(Sign s) { return sign_from_int(-sign_int(s)); }

// sign(a)*sign(b) = sign(a*b)
inline Sign operator*(Sign a, Sign b) { return sign_from_int(sign_int(a) * sign_int(b)); }

std::string_view sign_name(Sign s);  // "+1", "0", "-1"

std::ostream& operator<<(std::ostream& os, Sign s);

// Exact rational scalar. Always held in canonical form: denominator > 0,
// gcd(|num|, den) = 1. Immutable value semantics; arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int value) : v_(value) {}
    Rational(long value) : v_(static_cast<long int>(value)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p/q", an integer, or a plain decimal such as "-3.25"
    // (converted exactly as a scaled integer). No exponents.
    static std::optional<Rational> parse(std::string_view text);

    // Exact conversion; every finite binary double is a dyadic rational.
    static Rational from_double(double value);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Sign sign() const { return sign_from_int(sgn(v_)); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // Canonical formatting: "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Sign sign(const Rational& a) { return a.sign(); }

std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace minorsign
