#include "doctest.h"
#include "minorsign/descartes.hpp"

#include "minorsign/generate.hpp"

using namespace minorsign;

namespace {
std::vector<Rational> seq(std::vector<Rational> v) { return v; }
}

TEST_CASE("sign variation counting") {
    CHECK(sign_variations(seq({1, -2, 3})) == 2);
    CHECK(sign_variations(seq({1, 0, -1})) == 1);  // zeros dropped
    CHECK(sign_variations(seq({0, 0, 0})) == 0);
    CHECK(sign_variations(seq({5})) == 0);
    CHECK(sign_variations(seq({0, -1, 0, 0, -2})) == 0);
}

TEST_CASE("the +1, -1, ..., -1, +1 pattern has two variations") {
    for (int n = 2; n <= 9; ++n) {
        std::vector<Rational> s(static_cast<size_t>(n) + 1, Rational(-1));
        s.front() = 1;
        s.back() = 1;
        CHECK(sign_variations(s) == 2);
    }
}

TEST_CASE("variations are invariant under positive scaling") {
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> s;
        int len = 1 + static_cast<int>(rng.next_in(0, 8));
        for (int j = 0; j < len; ++j) s.push_back(Rational(rng.next_in(-4, 4)));
        Rational c(rng.next_in(1, 9), rng.next_in(1, 9));
        std::vector<Rational> scaled, negated;
        for (const Rational& x : s) scaled.push_back(c * x);
        for (const Rational& x : s) negated.push_back(-c * x);
        CHECK(sign_variations(scaled) == sign_variations(s));
        CHECK(sign_variations(negated) == sign_variations(s));  // global flip preserves changes
    }
}

TEST_CASE("descartes bounds on fixtures") {
    Polynomial p({1, 2, -3});
    DescartesBound b = descartes_bounds(p);
    CHECK(b.var_pos == 1);
    CHECK(b.var_neg == 1);

    DescartesBound none = descartes_bounds(Polynomial({1, 0, 1}));
    CHECK(none.var_pos == 0);
    CHECK(none.var_neg == 0);

    DescartesBound dbl = descartes_bounds(Polynomial({1, -2, 1}));
    CHECK(dbl.var_pos == 2);
    CHECK(dbl.pos_candidates() == std::vector<int>{2, 0});

    CHECK_THROWS_AS(descartes_bounds(Polynomial()), std::invalid_argument);
}

TEST_CASE("var of p(-x) equals var of alternately flipped coefficients") {
    SplitMix64 rng(9);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> c;
        int deg = static_cast<int>(rng.next_in(0, 8));
        for (int j = 0; j <= deg; ++j) c.push_back(Rational(rng.next_in(-5, 5)));
        Polynomial p(c);
        if (p.is_zero()) continue;
        std::vector<Rational> flipped = p.coeffs();
        int d = p.degree();
        for (size_t j = 0; j < flipped.size(); ++j)
            if ((d - static_cast<int>(j)) % 2 != 0) flipped[j] = -flipped[j];
        CHECK(sign_variations(p.negate_variable().coeffs()) == sign_variations(flipped));
    }
}

TEST_CASE("exact count when all roots are real") {
    CHECK(positive_roots_if_all_real(Polynomial({1, -2, 1})) == 2);  // (x-1)^2
    CHECK(positive_roots_if_all_real(Polynomial({1, 2, -3})) == 1);  // roots 1, -3
    CHECK(positive_roots_if_all_real(Polynomial({1, 0, 0, 0})) == 0);  // x^3
}

TEST_CASE("corollary conclusions") {
    CHECK(descartes_conclusion({1, 0}).positive == SideConclusion::exactly_one);
    CHECK(descartes_conclusion({1, 0}).negative == SideConclusion::none);
    CHECK(descartes_conclusion({0, 1}).negative == SideConclusion::exactly_one);
    CHECK(descartes_conclusion({2, 3}).positive == SideConclusion::indeterminate);
    CHECK(descartes_conclusion({2, 3}).negative == SideConclusion::indeterminate);
}
