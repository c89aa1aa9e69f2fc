#include "doctest.h"
#include "minorsign/matrix.hpp"

#include "test_helpers.hpp"

using minorsign::Matrix;
using minorsign::Rational;
using minorsign::SplitMix64;

TEST_CASE("determinant of small fixtures") {
    CHECK(determinant(Matrix::identity(3)) == Rational(1));
    CHECK(determinant(Matrix(2)) == Rational(0));
    CHECK(determinant(Matrix::from_rows({{-1, -2}, {-2, -1}})) == Rational(-3));
}

TEST_CASE("det(I_n) = 1 for n up to 10") {
    for (int n = 1; n <= 10; ++n) CHECK(determinant(Matrix::identity(n)) == Rational(1));
}

TEST_CASE("determinant agrees with cofactor expansion up to n=4") {
    SplitMix64 rng(101);
    for (int round = 0; round < 150; ++round) {
        int n = 1 + static_cast<int>(rng.next_in(0, 3));
        Matrix m = oracles::random_rational_matrix(n, rng);
        CHECK(determinant(m) == oracles::cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative on random 4x4") {
    SplitMix64 rng(5);
    for (int round = 0; round < 50; ++round) {
        Matrix a = oracles::random_rational_matrix(4, rng);
        Matrix b = oracles::random_rational_matrix(4, rng);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("symmetry flag is computed from entries") {
    CHECK(Matrix::from_rows({{1, 2}, {2, 1}}).symmetric());
    CHECK_FALSE(Matrix::from_rows({{1, 2}, {3, 1}}).symmetric());
    CHECK(Matrix::identity(5).symmetric());
    CHECK(Matrix::from_rows({{7}}).symmetric());
}

TEST_CASE("inverse round-trips and flags singularity") {
    SplitMix64 rng(23);
    int invertible_seen = 0;
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng.next_in(0, 3));
        Matrix m = oracles::random_rational_matrix(n, rng);
        auto inv = m.inverse();
        if (determinant(m).is_zero()) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(m * *inv == Matrix::identity(n));
            ++invertible_seen;
        }
    }
    CHECK(invertible_seen > 20);

    CHECK_FALSE(Matrix(3).inverse().has_value());
    CHECK(Matrix::from_rows({{Rational(1, 3), Rational(-2, 3)}, {Rational(-2, 3), Rational(1, 3)}})
              .inverse()
              .value() == Matrix::from_rows({{-1, -2}, {-2, -1}}));
}

TEST_CASE("construction rejects bad shapes") {
    CHECK_THROWS_AS(Matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(2, std::vector<Rational>{1, 2, 3}), std::invalid_argument);
}
