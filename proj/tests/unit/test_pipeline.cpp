#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shcalc/pipeline.hpp"

#include <cstdlib>

using namespace shcalc;

namespace {
constexpr auto Q = CoefficientField::Rationals;
constexpr auto F2 = CoefficientField::GF2;

NovikovScalar k(Rational v, CoefficientField f = Q) { return NovikovScalar::constant(v, f); }
NovikovScalar t(Rational c = 1, CoefficientField f = Q) { return NovikovScalar::monomial(c, 1, f); }

Rational ipow(long b, int e) {
    Rational r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string failing(const ShResult& r) {
    std::string out;
    for (const auto& d : r.diagnostics)
        if (!d.pass) out += d.name + ": " + d.detail + "; ";
    return out;
}
}  // namespace

TEST_CASE("regime classification") {
    CHECK(classify_regime(5, 2).kind == RegimeKind::Monotone);
    CHECK(classify_regime(5, 2).exact_mode);
    CHECK_FALSE(classify_regime(3, 3).exact_mode);
    CHECK(classify_regime(3, 4).kind == RegimeKind::CalabiYau);
    CHECK(classify_regime(3, 5).kind == RegimeKind::Unsupported);
    CHECK(classify_regime(3, 6).kind == RegimeKind::Unsupported);
    CHECK(classify_regime(3, 7).kind == RegimeKind::LargeMinChern);
    CHECK(classify_regime(1, 2).kind == RegimeKind::CalabiYau);
    CHECK(classify_regime(1, 3).kind == RegimeKind::LargeMinChern);
    CHECK_THROWS_AS(classify_regime(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(compute_sh(3, 5, Q), UnsupportedRegime);
}

TEST_CASE("r-matrix layout") {
    const LambdaMatrix r = build_r_matrix(5, 2, Q);
    REQUIRE(r.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            // 1-based (4+a, 1+a) holds 4 t for a = 0, 1.
            if (j == i + 1) CHECK(r(i, j) == k(-2));
            else if ((i == 3 && j == 0) || (i == 4 && j == 1)) CHECK(r(i, j) == t(4));
            else CHECK(r(i, j).is_zero());
        }
    CHECK_FALSE(r.has_unknowns());

    const LambdaMatrix r33 = build_r_matrix(3, 3, Q);
    CHECK(r33.has_unknowns());
    CHECK(unknown_entry_positions(3, 3, Q) == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 1}});
    CHECK(r33.is_unknown(1, 0));
    CHECK(r33(0, 0) == t(18));
    CHECK(r33(1, 1) == t(45));
    CHECK(unknown_entry_positions(3, 2, F2).empty());
    CHECK(build_r_matrix(3, 2, F2).is_zero());
}

TEST_CASE("closed-form rows over Q") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; 2 * n < 2 + m; ++n) {
            const ShResult r = compute_sh(m, n, Q);
            const int N = 1 + m - n;
            INFO("m=" << m << " n=" << n << " " << failing(r));
            REQUIRE(r.all_diagnostics_pass());
            REQUIRE(r.sh_kind == ShKind::Presentation);
            REQUIRE(r.sh_rank == static_cast<std::size_t>(N));
            LambdaPolynomial sh(N + 1, k(0));
            sh[0] = t(ipow(n, n));
            sh[N] = k(1);
            CHECK(r.sh_omega->relation == sh);
            CHECK(r.qh() == closed_form_qh(m, n, Q));
        }
}

TEST_CASE("vanishing cases") {
    for (int m = 1; m <= 5; ++m) {
        const ShResult cy = compute_sh(m, m + 1, Q);
        CHECK(cy.sh_kind == ShKind::ZeroRing);
        CHECK(cy.sh_rank == 0u);
        CHECK(vanishing_nilpotency(cy));
        const ShResult big = compute_sh(m, 2 * m + 1, Q);
        CHECK(big.sh_kind == ShKind::ZeroRing);
        CHECK(vanishing_nilpotency(big));
        CHECK(big.all_diagnostics_pass());
        for (int n = 2; n <= m; n += 2) {
            const ShResult g = compute_sh(m, n, F2);
            CHECK(g.sh_rank == 0u);
            CHECK(vanishing_nilpotency(g));
        }
    }
}

TEST_CASE("GF2 odd n matches the rational answer mod 2") {
    const ShResult r = compute_sh(5, 1, F2);
    REQUIRE(r.sh_rank == 5u);
    CHECK(r.sh_omega->relation.front() == t(1, F2));
    CHECK(r.all_diagnostics_pass());
}

TEST_CASE("partial mode") {
    const ShResult r = compute_sh(3, 3, Q);
    REQUIRE(r.sh_kind == ShKind::Partial);
    REQUIRE(r.partial.has_value());
    CHECK(r.partial->sh_nonzero);
    CHECK(r.partial->rank_multiple_of == 1);
    CHECK(r.partial->rank_min == 1);
    CHECK(r.partial->rank_max == 3);
    CHECK(r.partial->leading_coefficient == t(-81));
    CHECK(r.partial->leading_coefficient == expected_leading_coefficient(3, 3, Q));
    CHECK_FALSE(r.sh_rank.has_value());
    CHECK_FALSE(r.qh().complete);
    CHECK(r.all_diagnostics_pass());
    CHECK_THROWS_AS(vanishing_nilpotency(r), IncompletePresentation);

    const ShResult r64 = compute_sh(6, 4, Q);
    REQUIRE(r64.partial.has_value());
    CHECK(r64.partial->rank_multiple_of == 3);
    CHECK(r64.partial->rank_max == 6);
}

TEST_CASE("leading coefficient formula") {
    // (5,2): N = 4, A_0 = A_1 = 4, a_N = (+1) 2^3 (8) t.
    CHECK(expected_leading_coefficient(5, 2, Q) == t(64));
    CHECK(expected_leading_coefficient(1, 1, Q) == t(-1));
    CHECK_THROWS_AS(expected_leading_coefficient(3, 4, Q), RegimeError);
}

TEST_CASE("predicates") {
    CHECK(rank_constraints(5, 2, 4));
    CHECK_FALSE(rank_constraints(5, 2, 6));
    CHECK_FALSE(rank_constraints(6, 4, 4));
    CHECK(rank_constraints(6, 4, 3));
    CHECK(vb_vanishing_predicate(4, 2, 2));
    CHECK_FALSE(vb_vanishing_predicate(3, 2, 2));
    CHECK(vb_vanishing_predicate(-4, 1, 4));
    CHECK_THROWS_AS(vb_vanishing_predicate(4, 0, 1), std::invalid_argument);
    CHECK(kodaira_threshold(3, 7));
    CHECK_FALSE(kodaira_threshold(3, 6));
}

TEST_CASE("quantum powers versus classical powers") {
    // n = 1: quantum and classical power bases coincide.
    CHECK(quantum_power_basis(build_r_matrix(4, 1, Q), 1) == LambdaMatrix::identity(5, Q));
    const LambdaMatrix r = build_r_matrix(5, 2, Q);
    const LambdaMatrix P = quantum_power_basis(r, 2);
    const auto Pinv = inverse(P);
    REQUIRE(Pinv.has_value());
    const RingPresentation qh = *compute_sh(5, 2, Q).qh_omega;
    RingElement c1 = generator_power(qh, 1);
    for (auto& x : c1.coeffs) x *= k(-2);
    const LambdaMatrix mult = multiplication_matrix(qh, c1);
    CHECK_FALSE(mult == r);
    CHECK(P * mult * *Pinv == r);
}

TEST_CASE("every supported pair passes its own diagnostics") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 2 * m + 2; ++n) {
            if (classify_regime(m, n).kind == RegimeKind::Unsupported) continue;
            for (auto field : {Q, F2}) {
                const ShResult r = compute_sh(m, n, field, 5);
                INFO("m=" << m << " n=" << n << " " << failing(r));
                CHECK(r.all_diagnostics_pass());
                if (r.sh_rank) CHECK(rank_constraints(m, n, static_cast<std::int64_t>(*r.sh_rank)));
            }
        }
}
