#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "minorsign/polynomial.hpp"

namespace minorsign {

// Elementwise signs of a coefficient vector; zeros are kept in storage and
// dropped only when counting variations.
using SignSequence = std::vector<Sign>;

SignSequence sign_sequence(std::span<const Rational> coeffs);

// Number of strict sign alternations after dropping zeros. The all-zero
// sequence counts 0.
int sign_variations(std::span<const Rational> coeffs);
int sign_variations(const SignSequence& signs);

// Var(p(x)) and Var(p(-x)) plus the parity-descent candidate sets for the
// number of positive/negative real roots.
struct DescartesBound {
    int var_pos = 0;
    int var_neg = 0;

    std::vector<int> pos_candidates() const;  // {var_pos, var_pos-2, ..., >= 0}
    std::vector<int> neg_candidates() const;
};

DescartesBound descartes_bounds(const Polynomial& p);  // rejects the zero polynomial

// When every root of p is real, Var(p(x)) counts the positive roots exactly
// (with multiplicity). The all-real premise is the caller's contract.
int positive_roots_if_all_real(const Polynomial& p);

enum class SideConclusion { exactly_one, none, indeterminate };

struct DescartesConclusion {
    SideConclusion positive;
    SideConclusion negative;
};

// Var = 1 pins exactly one root on that side, Var = 0 pins none; anything
// larger only narrows to the parity candidates.
DescartesConclusion descartes_conclusion(const DescartesBound& bound);

std::ostream& operator<<(std::ostream& os, SideConclusion c);

}  // namespace minorsign
