#include "doctest.h"
#include "minorsign/minors.hpp"

#include "test_helpers.hpp"

using namespace minorsign;

namespace {
const Matrix worked = Matrix::from_rows({{-1, -2}, {-2, -1}});
}

TEST_CASE("principal minors of fixtures") {
    CHECK(principal_minor(Matrix::identity(3), IndexSet{{1, 3}}) == Rational(1));
    CHECK(principal_minor(worked, IndexSet{{2}}) == Rational(-1));
    CHECK(principal_minor(worked, IndexSet{{1, 2}}) == Rational(-3));
    CHECK_THROWS_AS(principal_minor(worked, IndexSet{{1, 3}}), std::out_of_range);
    CHECK_THROWS_AS(principal_minor(worked, IndexSet{{}}), std::out_of_range);
    CHECK_THROWS_AS(principal_minor(worked, IndexSet{{2, 1}}), std::out_of_range);
}

TEST_CASE("minor table of the worked 2x2 example") {
    MinorTable t = all_principal_minors(worked);
    REQUIRE(t.entries.size() == 3);
    CHECK(t.minor(IndexSet{{1}}) == Rational(-1));
    CHECK(t.minor(IndexSet{{2}}) == Rational(-1));
    CHECK(t.minor(IndexSet{{1, 2}}) == Rational(-3));
    CHECK(t.sums == std::vector<Rational>{-2, -3});
}

TEST_CASE("minor table fixtures") {
    MinorTable id3 = all_principal_minors(Matrix::identity(3));
    CHECK(id3.sums == std::vector<Rational>{3, 3, 1});
    CHECK(id3.entries.size() == 7);

    MinorTable zero2 = all_principal_minors(Matrix(2));
    CHECK(zero2.sums == std::vector<Rational>{0, 0});
    for (const auto& [idx, v] : zero2.entries) CHECK(v.is_zero());
}

TEST_CASE("table size, ordering, and E_k structure") {
    SplitMix64 rng(31);
    Matrix m = oracles::random_rational_matrix(5, rng);
    MinorTable t = all_principal_minors(m);
    CHECK(t.entries.size() == (1u << 5) - 1);

    // grouped by cardinality, colex within each group, E_1 = trace, E_n = det
    int last_k = 0;
    std::uint32_t last_mask = 0;
    for (const auto& [idx, v] : t.entries) {
        if (idx.k() != last_k) {
            CHECK(idx.k() == last_k + 1);
            last_k = idx.k();
        } else {
            CHECK(idx.mask() > last_mask);
        }
        last_mask = idx.mask();
    }
    CHECK(t.sums[0] == m.trace());
    CHECK(t.sums[4] == determinant(m));
}

TEST_CASE("diagonal matrices have elementary-symmetric minor sums") {
    Matrix d = Matrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    MinorTable t = all_principal_minors(d);
    CHECK(t.sums == std::vector<Rational>{10, 31, 30});
}

TEST_CASE("char poly from minors: fixtures") {
    CHECK(char_poly_from_minors(all_principal_minors(Matrix::identity(2))).coeffs ==
          std::vector<Rational>{1, -2, 1});
    CHECK(char_poly_from_minors(all_principal_minors(worked)).coeffs == std::vector<Rational>{1, 2, -3});
    CHECK(char_poly_from_minors(all_principal_minors(Matrix::from_rows({{0, 1}, {1, 0}}))).coeffs ==
          std::vector<Rational>{1, 0, -1});
}

TEST_CASE("char poly via Faddeev-LeVerrier: fixtures") {
    CHECK(char_poly_faddeev(Matrix::identity(2)).coeffs == std::vector<Rational>{1, -2, 1});
    CHECK(char_poly_faddeev(worked).coeffs == std::vector<Rational>{1, 2, -3});
}

TEST_CASE("both char-poly routes match the direct det(xI - A) expansion") {
    SplitMix64 rng(47);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng.next_in(0, 3));
        Matrix m = oracles::random_rational_matrix(n, rng);
        Polynomial direct = oracles::char_poly_direct(m);
        CHECK(char_poly_faddeev(m).as_polynomial() == direct);
        CHECK(char_poly_from_minors(all_principal_minors(m)).as_polynomial() == direct);
    }
}

TEST_CASE("the two routes agree exactly for n up to 7") {
    SplitMix64 rng(53);
    for (int n = 1; n <= 7; ++n)
        for (int round = 0; round < 8; ++round) {
            Matrix m = oracles::random_rational_matrix(n, rng);
            CHECK(char_poly_faddeev(m) == char_poly_from_minors(all_principal_minors(m)));
        }
}

TEST_CASE("char poly endpoint identities") {
    SplitMix64 rng(61);
    for (int round = 0; round < 30; ++round) {
        int n = 1 + static_cast<int>(rng.next_in(0, 5));
        Matrix m = oracles::random_rational_matrix(n, rng);
        CharPoly cp = char_poly_faddeev(m);
        Rational det = determinant(m);
        // a_n = (-1)^n det(A) = C_A(0)
        CHECK(cp.a(n) == (n % 2 == 0 ? det : -det));
        CHECK(cp.as_polynomial().eval(0) == cp.a(n));
    }
}

TEST_CASE("minor_sums matches enumeration without the cap") {
    SplitMix64 rng(71);
    Matrix m = oracles::random_rational_matrix(6, rng);
    CHECK(minor_sums(m) == all_principal_minors(m).sums);
    CHECK(minor_sums(Matrix::identity(3)) == std::vector<Rational>{3, 3, 1});
    CHECK(minor_sums(Matrix(4)) == std::vector<Rational>{0, 0, 0, 0});
}

TEST_CASE("enumeration cap") {
    Matrix big = Matrix::identity(13);
    CHECK_THROWS_AS(all_principal_minors(big), capacity_error);
    try {
        all_principal_minors(big);
    } catch (const capacity_error& e) {
        CHECK(e.n() == 13);
        CHECK(e.cap() == 12);
        CHECK(std::string(e.what()).find("12") != std::string::npos);
    }
    // raising the cap unblocks
    CHECK(all_principal_minors(big, 13).entries.size() == (1u << 13) - 1);
    CHECK_THROWS_AS(all_principal_minors(big, 40), std::invalid_argument);
}
