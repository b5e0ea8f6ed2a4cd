#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shcalc/gw_entries.hpp"

#include <algorithm>

using namespace shcalc;

namespace {
constexpr auto Q = CoefficientField::Rationals;
constexpr auto F2 = CoefficientField::GF2;

// Expand prod_{A=1}^{n-1} (A x + (n-A)) with plain integer arithmetic.
std::vector<long> naive_tau(int n) {
    std::vector<long> p{1};
    for (int A = 1; A < n; ++A) {
        std::vector<long> q(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k] += p[k] * (n - A);
            q[k + 1] += p[k] * A;
        }
        p = q;
    }
    return p;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

TEST_CASE("small tau tables") {
    CHECK(tau_table(1, Q).coeffs == std::vector<Rational>{1});
    CHECK(tau_table(2, Q).coeffs == std::vector<Rational>{1, 1});
    CHECK(tau_table(3, Q).coeffs == std::vector<Rational>{2, 5, 2});
    CHECK(tau_table(4, Q).coeffs == std::vector<Rational>{6, 26, 26, 6});
    CHECK_THROWS_AS(tau_table(0, Q), std::invalid_argument);
}

TEST_CASE("tau sums, symmetry, and agreement with direct expansion") {
    for (int n = 1; n <= 8; ++n) {
        const auto tau = tau_table(n, Q).coeffs;
        const auto naive = naive_tau(n);
        REQUIRE(tau.size() == naive.size());
        Rational sum = 0;
        for (std::size_t k = 0; k < tau.size(); ++k) {
            CHECK(tau[k] == naive[k]);
            CHECK(tau[k] == tau[tau.size() - 1 - k]);
            sum += tau[k];
        }
        CHECK(sum == ipow(n, n - 1));
    }
}

TEST_CASE("tau mod 2") {
    for (int n = 1; n <= 12; ++n) {
        const auto tau = tau_table(n, F2).coeffs;
        const auto naive = naive_tau(n);
        REQUIRE(tau.size() == static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < tau.size(); ++k) {
            CHECK(tau[k] == naive[k] % 2);
            Rational closed = 0;
            if (n == 2) closed = 1;
            else if (n % 2 == 1 && static_cast<int>(k) == (n - 1) / 2) closed = 1;
            CHECK(tau[k] == closed);
        }
    }
}

TEST_CASE("subdiagonal entries") {
    CHECK(subdiagonal_entry(1, 1, 0, Q) == 1);
    CHECK(subdiagonal_entry(5, 2, 0, Q) == 4);
    CHECK(subdiagonal_entry(5, 2, 1, Q) == 4);
    CHECK(subdiagonal_entry(3, 3, 1, Q) == 45);
    CHECK(subdiagonal_entry(3, 3, 0, F2) == 0);
    CHECK(subdiagonal_entry(3, 3, 1, F2) == 1);
    CHECK_THROWS_AS(subdiagonal_entry(3, 4, 0, Q), RegimeError);
    CHECK_THROWS_AS(subdiagonal_entry(3, 2, 2, Q), RegimeError);
    CHECK_THROWS_AS(subdiagonal_entry(3, 2, -1, Q), RegimeError);
}

TEST_CASE("section moduli bookkeeping") {
    CHECK(obstruction_rank(3, 2) == 6);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 2 * m + 2; ++n)
            for (int d = 0; d <= 3; ++d) {
                const SplittingType s = splitting_type(m, n, d);
                CHECK(s.degrees.size() == static_cast<std::size_t>(m + 1));
                CHECK(s.h0() - s.h1() == virdim_sections(m, n, d));
                CHECK(virdim_sections(m, n, d) == m + (1 + m - n) * d);
                CHECK(s.h1() == obstruction_rank(n, d));
            }
    CHECK(h0_P1(-1) == 0);
    CHECK(h1_P1(-3) == 2);
    CHECK(chi_P1(-3) == -2);
}

TEST_CASE("entry positions") {
    // (5,2): N = 4, so A_a t at (4+a, 1+a).
    CHECK(entry_position_condition(5, 2, 4, 1) == 1);
    CHECK(entry_position_condition(5, 2, 5, 2) == 1);
    CHECK(entry_position_condition(5, 2, 1, 2) == 0);
    CHECK_FALSE(entry_position_condition(5, 2, 3, 1).has_value());
    // (3,3): N = 1, degree 2 at (2,1).
    CHECK(entry_position_condition(3, 3, 2, 1) == 2);
    // N = 0: only the superdiagonal.
    CHECK(entry_position_condition(3, 4, 1, 2) == 0);
    CHECK_FALSE(entry_position_condition(3, 4, 2, 2).has_value());
    CHECK_THROWS_AS(entry_position_condition(3, 2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(entry_position_condition(3, 2, 1, 5), std::out_of_range);
}
