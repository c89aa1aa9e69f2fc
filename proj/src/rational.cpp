#include "minorsign/rational.hpp"

#include <cctype>
#include <cmath>

namespace minorsign {

std::string_view sign_name(Sign s) {
    switch (s) {
        case Sign::negative: return "-1";
        case Sign::zero: return "0";
        case Sign::positive: return "+1";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << sign_name(s); }

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(static_cast<long int>(num), static_cast<long int>(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// [+-]? digits
bool parse_signed_digits(std::string_view s, std::string& out) {
    std::string sign;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') sign = "-";
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return false;
    out = sign + std::string(s);
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num, den;
        if (!parse_signed_digits(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_signed_digits(text.substr(slash + 1), den)) return std::nullopt;
        mpz_class d(den, 10);
        if (d == 0) return std::nullopt;
        return Rational(mpz_class(num, 10), d);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        std::string digits;
        if (!parse_signed_digits(int_part, digits)) return std::nullopt;
        if (!all_digits(frac_part)) return std::nullopt;
        bool negative = !digits.empty() && digits[0] == '-';
        std::string magnitude = negative ? digits.substr(1) : digits;
        magnitude += std::string(frac_part);
        mpz_class num(magnitude, 10);
        if (negative) num = -num;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        return Rational(num, den);
    }

    std::string digits;
    if (!parse_signed_digits(text, digits)) return std::nullopt;
    return Rational(mpz_class(digits, 10), mpz_class(1));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite double has no rational value");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace minorsign
