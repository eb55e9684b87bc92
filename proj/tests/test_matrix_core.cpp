#include <gtest/gtest.h>

#include "support.hpp"

using namespace matlen;
using matlen::testing::evaluate_at;
using matlen::testing::leibniz_det;
using matlen::testing::Q;

namespace {

Matrix<RationalField> diag(std::initializer_list<long> d) {
    Matrix<RationalField> m(Q, d.size());
    std::size_t k = 0;
    for (long x : d) {
        m(k, k) = x;
        ++k;
    }
    return m;
}

Polynomial<RationalField> poly(std::vector<long> c) { return Polynomial<RationalField>::from_ints(Q, c); }

}  // namespace

TEST(Matrix, UnitProducts) {
    EXPECT_EQ(elem(Q, 2, 1, 2) * elem(Q, 2, 2, 1), elem(Q, 2, 1, 1));
    EXPECT_EQ(jordan(Q, 3) * jordan(Q, 3), elem(Q, 3, 1, 3));
}

TEST(Matrix, NilpotentPairThreeSquaresToCorner) {
    // B_3 J_3^0 B_3 = -E_{3,1}; the square-zero property only starts at n = 4
    auto [j, b] = nilpotent_pair(Q, 3);
    EXPECT_EQ(b * j.pow(0) * b, mpq_class(-1) * elem(Q, 3, 3, 1));
}

TEST(Matrix, TransposeIdentitySum) {
    EXPECT_EQ(transpose(jordan(Q, 2)), elem(Q, 2, 2, 1));
    EXPECT_EQ(identity(Q, 3), diag({1, 1, 1}));
    EXPECT_EQ(mat_add(jordan(Q, 2), transpose(jordan(Q, 2))), elem(Q, 2, 1, 2) + elem(Q, 2, 2, 1));
    EXPECT_EQ(scalar_mul_mat(mpq_class(3), identity(Q, 2)), diag({3, 3}));
}

TEST(Matrix, MismatchesThrow) {
    EXPECT_THROW(mat_mul(identity(Q, 2), identity(Q, 3)), dimension_mismatch);
    const PrimeField f5(5), f7(7);
    EXPECT_THROW(identity(f5, 2) * identity(f7, 2), field_mismatch);
    EXPECT_THROW(Matrix<RationalField>(Q, 0), dimension_mismatch);
    EXPECT_THROW(Matrix<RationalField>(Q, 2, {1, 2, 3}), dimension_mismatch);
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(jordan(Q, 2)), poly({0, 0, 1}));
    EXPECT_EQ(char_poly(diag({1, 2})), poly({2, -3, 1}));
    const auto a = jordan(Q, 3) + transpose(jordan(Q, 3)).pow(2);
    EXPECT_EQ(char_poly(a), poly({-1, 0, 0, 1}));
}

TEST(MinPoly, Examples) {
    EXPECT_EQ(min_poly(identity(Q, 3)), poly({-1, 1}));
    EXPECT_EQ(min_poly(diag({1, 1, 2})), poly({2, -3, 1}));
    EXPECT_EQ(min_poly(jordan(Q, 3)), poly({0, 0, 0, 1}));
}

TEST(Derogatory, Examples) {
    EXPECT_TRUE(is_derogatory(diag({1, 1, 2})));
    EXPECT_FALSE(is_derogatory(jordan(Q, 3)));
    EXPECT_FALSE(is_derogatory(diag({1, 2, 3})));
}

TEST(Invertible, Examples) {
    EXPECT_FALSE(is_invertible(jordan(Q, 2)));
    EXPECT_TRUE(is_invertible(diag({1, 2})));
    EXPECT_TRUE(is_invertible(jordan(Q, 4).pow(2) + transpose(jordan(Q, 4)).pow(2)));
}

TEST(IdentityBound, DiagonalTwoByTwo) {
    const auto r = identity_length_bound(diag({1, 2}), 1);
    EXPECT_EQ(r.bound, 2u);
    ASSERT_EQ(r.coefficients.size(), 2u);
    EXPECT_EQ(r.coefficients[0], mpq_class(3, 2));
    EXPECT_EQ(r.coefficients[1], mpq_class(-1, 2));
}

TEST(IdentityBound, NonderogatoryUsesFullDegree) {
    const auto a = jordan(Q, 4, mpq_class(1));
    ASSERT_FALSE(is_derogatory(a));
    EXPECT_EQ(identity_length_bound(a, 1).bound, 4u);
}

TEST(IdentityBound, DerogatoryStaysWithinTwoNMinusTwo) {
    const auto r = identity_length_bound(diag({1, 1, 2}), 2);
    EXPECT_EQ(r.bound, 4u);
    EXPECT_LE(r.bound, 2u * 3 - 2);
}

TEST(IdentityBound, Errors) {
    EXPECT_THROW(identity_length_bound(jordan(Q, 3), 1), std::domain_error);
    EXPECT_THROW(identity_length_bound(diag({1, 2}), 0), std::invalid_argument);
}

TEST(Polynomial, DivmodReconstructs) {
    const auto a = poly({1, 2, 3, 4, 5}), b = poly({-1, 0, 2});
    const auto [quot, rem] = a.divmod(b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
}

// properties over random matrices

template <ExactField F>
void check_polynomials(const F& f, std::uint64_t seed, int rounds, long magnitude) {
    Rng rng(seed);
    for (int t = 0; t < rounds; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 6));
        auto a = random_matrix(f, n, rng, magnitude);
        // sprinkle low-rank and repeated-eigenvalue cases
        if (t % 5 == 0) a = a * jordan(f, n);
        if (t % 7 == 0) a = Matrix<F>::identity(f, n) + f.from_int(2) * (a * a);
        const auto chi = char_poly(a);
        const auto mu = min_poly(a);
        ASSERT_EQ(chi.degree(), static_cast<int>(n));
        ASSERT_TRUE(chi.is_monic());
        ASSERT_TRUE(mu.is_monic());
        ASSERT_TRUE(chi.evaluate(a).is_zero()) << "Cayley-Hamilton";
        ASSERT_TRUE(mu.evaluate(a).is_zero());
        ASSERT_TRUE(chi.divmod(mu).second.is_zero()) << "min poly divides char poly";

        // det(xI - A) against the Leibniz sum at n + 1 points pins chi completely
        for (long x = 0; x <= static_cast<long>(n); ++x) {
            auto shifted = f.from_int(x) * Matrix<F>::identity(f, n) - a;
            ASSERT_EQ(evaluate_at(chi, f.from_int(x)), leibniz_det(shifted));
        }
        // minimality: I, A, ..., A^(d-1) are independent
        std::vector<std::vector<typename F::value_type>> powers;
        auto p = Matrix<F>::identity(f, n);
        for (int k = 0; k < mu.degree(); ++k, p = p * a) powers.push_back(p.vec());
        ASSERT_EQ(rank_of(f, n * n, powers), static_cast<std::size_t>(mu.degree()));

        ASSERT_EQ(is_invertible(a), !f.is_zero(chi.coeff(0)));
        ASSERT_EQ(is_invertible(a), !f.is_zero(leibniz_det(a)));
        if (is_invertible(a)) {
            const auto r = identity_length_bound(a, 1);
            ASSERT_EQ(r.bound, static_cast<std::size_t>(mu.degree()));
        }
    }
}

TEST(PolynomialProperties, Rationals) { check_polynomials(Q, 1, 300, 4); }
TEST(PolynomialProperties, GF2) { check_polynomials(PrimeField(2), 2, 300, 0); }
TEST(PolynomialProperties, GF5) { check_polynomials(PrimeField(5), 5, 300, 0); }
TEST(PolynomialProperties, GF65537) { check_polynomials(PrimeField(65537), 7, 200, 0); }
