#include "minorsign/descartes.hpp"

#include <stdexcept>

namespace minorsign {

SignSequence sign_sequence(std::span<const Rational> coeffs) {
    SignSequence out;
    out.reserve(coeffs.size());
    for (const Rational& c : coeffs) out.push_back(c.sign());
    return out;
}

int sign_variations(const SignSequence& signs) {
    int count = 0;
    Sign prev = Sign::zero;
    for (Sign s : signs) {
        if (s == Sign::zero) continue;
        if (prev != Sign::zero && s != prev) ++count;
        prev = s;
    }
    return count;
}

int sign_variations(std::span<const Rational> coeffs) { return sign_variations(sign_sequence(coeffs)); }

static std::vector<int> parity_descent(int from) {
    std::vector<int> out;
    for (int v = from; v >= 0; v -= 2) out.push_back(v);
    return out;
}

std::vector<int> DescartesBound::pos_candidates() const { return parity_descent(var_pos); }
std::vector<int> DescartesBound::neg_candidates() const { return parity_descent(var_neg); }

DescartesBound descartes_bounds(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Descartes bounds of the zero polynomial");
    DescartesBound b;
    b.var_pos = sign_variations(p.coeffs());
    b.var_neg = sign_variations(p.negate_variable().coeffs());
    return b;
}

int positive_roots_if_all_real(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    return sign_variations(p.coeffs());
}

DescartesConclusion descartes_conclusion(const DescartesBound& bound) {
    auto side = [](int var) {
        if (var == 0) return SideConclusion::none;
        if (var == 1) return SideConclusion::exactly_one;
        return SideConclusion::indeterminate;
    };
    return {side(bound.var_pos), side(bound.var_neg)};
}

std::ostream& operator<<(std::ostream& os, SideConclusion c) {
    switch (c) {
        case SideConclusion::exactly_one: return os << "exactly-one";
        case SideConclusion::none: return os << "none";
        case SideConclusion::indeterminate: return os << "indeterminate";
    }
    return os;
}

}  // namespace minorsign
