#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shcalc/linalg.hpp"
#include "support/oracles.hpp"

using namespace shcalc;
using shcalc::testing::leibniz_char_poly;
using shcalc::testing::random_matrix;

namespace {
constexpr auto Q = CoefficientField::Rationals;
constexpr auto F2 = CoefficientField::GF2;

NovikovScalar k(long v, CoefficientField f = Q) { return NovikovScalar::constant(v, f); }
NovikovScalar t(long c = 1, CoefficientField f = Q) { return NovikovScalar::monomial(c, 1, f); }

// Nilpotent shift of size s.
LambdaMatrix shift(std::size_t s) {
    LambdaMatrix m(s, Q);
    for (std::size_t i = 0; i + 1 < s; ++i) m(i, i + 1) = k(1);
    return m;
}
}  // namespace

TEST_CASE("char poly of the O(-1) -> P^1 matrix") {
    LambdaMatrix r(2, Q);
    r(0, 0) = t();
    r(0, 1) = k(-1);
    const CharPoly cp = char_poly(r);
    REQUIRE(cp.degree() == 2);
    CHECK(cp.a[0] == k(1));
    CHECK(cp.a[1] == -t());
    CHECK(cp.a[2].is_zero());
    const ShPresentation sh = sh_presentation_from_charpoly(cp);
    CHECK(sh.p == 1);
    CHECK(sh.relation == LambdaPolynomial{-t(), k(1)});
}

TEST_CASE("nilpotent matrices") {
    const LambdaMatrix n4 = shift(4);
    const CharPoly cp = char_poly(n4);
    for (std::size_t i = 1; i <= 4; ++i) CHECK(cp.a[i].is_zero());
    CHECK(sh_presentation_from_charpoly(cp).p == 0);
    CHECK(kernel_power_dimensions(n4) == std::vector<std::size_t>{0, 1, 2, 3, 4, 4});
    CHECK(stabilization_index(n4) == 4);
    CHECK(jordan_zero_block_sizes(n4) == std::vector<std::size_t>{4});
    CHECK(n4.power(4).is_zero());
    CHECK_FALSE(n4.power(3).is_zero());
}

TEST_CASE("Jordan structure of a block-diagonal matrix") {
    // blocks: J_2(0), J_1(0), [t].
    LambdaMatrix m(4, Q);
    m(0, 1) = k(1);
    m(3, 3) = t();
    CHECK(jordan_zero_block_sizes(m) == std::vector<std::size_t>{2, 1});
    CHECK(stabilization_index(m) == 2);
    CHECK(stabilized_kernel(m).size() == 3);
    CHECK(rank(m) == 2);
    CHECK(image_power_rank(m, 5) == 1);
}

TEST_CASE("rank kernel and inverse") {
    LambdaMatrix m(3, Q);
    m(0, 0) = k(1);
    m(0, 1) = t();
    m(1, 0) = t();
    m(1, 1) = t() * t();
    m(2, 2) = k(1) + t();
    CHECK(rank(m) == 2);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (const auto& x : m.apply(ker[0])) CHECK(x.is_zero());
    CHECK_FALSE(inverse(m).has_value());

    m(1, 1) = k(2);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == LambdaMatrix::identity(3, Q));
    CHECK(m * *inv == LambdaMatrix::identity(3, Q));
}

TEST_CASE("GF2 arithmetic in matrices") {
    LambdaMatrix m(2, F2);
    m(0, 0) = k(1, F2);
    m(1, 1) = k(1, F2);
    CHECK((m + m).is_zero());
    const CharPoly cp = char_poly(m);
    // (x+1)^2 = x^2 + 1 over GF2.
    CHECK(cp.a[1].is_zero());
    CHECK(cp.a[2] == k(1, F2));
}

TEST_CASE("field and shape mismatches") {
    CHECK_THROWS_AS(LambdaMatrix(2, Q) * LambdaMatrix(2, F2), FieldMismatch);
    CHECK_THROWS_AS(LambdaMatrix(2, Q) + LambdaMatrix(3, Q), std::invalid_argument);
    CHECK_THROWS_AS(LambdaMatrix(2, Q).apply({k(1)}), std::invalid_argument);
}

TEST_CASE("unknown entries") {
    LambdaMatrix m(3, Q);
    CHECK_FALSE(m.has_unknowns());
    m.mark_unknown(2, 0);
    CHECK(m.has_unknowns());
    CHECK(m.to_strings()[2][0] == "?");
    CHECK(m.to_strings()[0][0] == "0");
}

TEST_CASE("homogeneity of graded power-basis matrices") {
    // N = 2, size 3: t may sit at (i, j) with i - j + 1 = 2, i.e. one below the diagonal.
    LambdaMatrix m(3, Q, BasisLabel::OmegaPowers, GradingContext{2});
    m(0, 1) = k(-1);
    m(1, 0) = t(4);
    CHECK(m.is_homogeneous());
    m(2, 0) = t();
    CHECK_FALSE(m.is_homogeneous());
}

TEST_CASE("Berkowitz agrees with the Leibniz expansion") {
    for (auto field : {Q, F2}) {
        std::mt19937_64 rng(field == Q ? 101 : 202);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t size = 1 + trial % 4;
            const LambdaMatrix m = random_matrix(rng, size, field, trial % 2 == 0);
            REQUIRE(char_poly(m).ascending() == leibniz_char_poly(m));
        }
    }
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    for (auto field : {Q, F2}) {
        std::mt19937_64 rng(field == Q ? 7 : 8);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t size = 1 + trial % 5;
            const LambdaMatrix m = random_matrix(rng, size, field, true);
            REQUIRE(evaluate_at(char_poly(m).ascending(), m).is_zero());
        }
    }
}

TEST_CASE("kernel dimensions are monotone and rank-nullity holds") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t size = 1 + trial % 5;
        const LambdaMatrix m = random_matrix(rng, size, Q, true);
        const auto dims = kernel_power_dimensions(m);
        for (std::size_t i = 1; i < dims.size(); ++i) REQUIRE(dims[i - 1] <= dims[i]);
        REQUIRE(rank(m) + kernel_basis(m).size() == size);
        // The quotient by the generalized 0-eigenspace has rank p.
        const std::size_t p = sh_presentation_from_charpoly(char_poly(m)).p;
        REQUIRE(size - stabilized_kernel(m).size() == p);
        REQUIRE(image_power_rank(m, size) == p);
        std::size_t blocks = 0;
        for (auto b : jordan_zero_block_sizes(m)) blocks += b;
        REQUIRE(blocks == size - p);
    }
}
