#pragma once

// Closed-form Gromov-Witten data for sections of O(-n) -> P^m:
// the tau_{a,n} coefficients, degree-one subdiagonal entries A_a, and the
// sheaf-cohomology bookkeeping of section moduli over P^1.

#include "shcalc/novikov.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shcalc {

class RegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficients of prod_{A+B=n, A,B>=1} (A x + B), lowest power first.
struct TauTable {
    int n = 0;
    CoefficientField field = CoefficientField::Rationals;
    std::vector<Rational> coeffs;
};

TauTable tau_table(int n, CoefficientField field);

/// A_a = n^2 tau_{a,n}, defined for 1 <= n < 1+m and 0 <= a <= n-1.
Rational subdiagonal_entry(int m, int n, int a, CoefficientField field);

/// Complex rank n*d of the obstruction bundle over degree-d sections.
std::int64_t obstruction_rank(int n, std::int64_t d);

/// Degrees of the line-bundle summands of u^*T^vE for a degree-d section:
/// {2d, d (m-1 times), -1-nd}.
struct SplittingType {
    std::vector<std::int64_t> degrees;
    std::int64_t total_degree() const;
    std::int64_t h0() const;
    std::int64_t h1() const;
};

SplittingType splitting_type(int m, int n, std::int64_t d);

inline std::int64_t h0_P1(std::int64_t d) { return d + 1 > 0 ? d + 1 : 0; }
inline std::int64_t h1_P1(std::int64_t d) { return -d - 1 > 0 ? -d - 1 : 0; }
inline std::int64_t chi_P1(std::int64_t d) { return d + 1; }

/// Complex virtual dimension m + N d of the degree-d section space.
std::int64_t virdim_sections(int m, int n, std::int64_t d);

/// Section degree d >= 0 contributing to r-matrix entry (i, j) (1-based),
/// i.e. the solution of N d = i - j + 1. With N = 0 only the constants on
/// the superdiagonal are reported.
std::optional<std::int64_t> entry_position_condition(int m, int n, int i, int j);

}  // namespace shcalc
