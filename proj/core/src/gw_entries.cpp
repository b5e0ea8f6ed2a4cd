#include "shcalc/gw_entries.hpp"

#include <numeric>
#include <string>

namespace shcalc {

TauTable tau_table(int n, CoefficientField field) {
    if (n < 1) throw std::invalid_argument("tau_table: n must be >= 1, got " + std::to_string(n));
    // Expand over Z first; the GF2 table is the reduction of the integer one.
    std::vector<mpz_class> poly{1};
    for (int A = 1; A < n; ++A) {
        const int B = n - A;
        std::vector<mpz_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += B * poly[k];
            next[k + 1] += A * poly[k];
        }
        poly = std::move(next);
    }
    TauTable table{n, field, {}};
    table.coeffs.reserve(poly.size());
    for (const auto& c : poly) table.coeffs.push_back(to_field(Rational(c), field));
    return table;
}

Rational subdiagonal_entry(int m, int n, int a, CoefficientField field) {
    if (m < 1 || n < 1 || n >= 1 + m)
        throw RegimeError("A_a is only defined for 1 <= n < 1+m (got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
    if (a < 0 || a > n - 1)
        throw RegimeError("A_a index a=" + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
    const TauTable tau = tau_table(n, CoefficientField::Rationals);
    return to_field(Rational(n) * n * tau.coeffs[static_cast<std::size_t>(a)], field);
}

std::int64_t obstruction_rank(int n, std::int64_t d) {
    if (n < 1) throw std::invalid_argument("obstruction_rank: n must be >= 1");
    return n * d;
}

std::int64_t SplittingType::total_degree() const {
    return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

std::int64_t SplittingType::h0() const {
    std::int64_t s = 0;
    for (auto d : degrees) s += h0_P1(d);
    return s;
}

std::int64_t SplittingType::h1() const {
    std::int64_t s = 0;
    for (auto d : degrees) s += h1_P1(d);
    return s;
}

SplittingType splitting_type(int m, int n, std::int64_t d) {
    if (m < 1) throw std::invalid_argument("splitting_type: m must be >= 1");
    SplittingType s;
    s.degrees.reserve(static_cast<std::size_t>(m) + 1);
    s.degrees.push_back(2 * d);
    for (int k = 0; k < m - 1; ++k) s.degrees.push_back(d);
    s.degrees.push_back(-1 - n * d);
    return s;
}

std::int64_t virdim_sections(int m, int n, std::int64_t d) { return m + (1 + m - n) * d; }

std::optional<std::int64_t> entry_position_condition(int m, int n, int i, int j) {
    if (i < 1 || j < 1 || i > m + 1 || j > m + 1)
        throw std::out_of_range("entry_position_condition: index outside 1..m+1");
    const std::int64_t minimal_chern = 1 + m - n;
    const std::int64_t target = i - j + 1;
    if (target == 0) return 0;
    if (minimal_chern == 0 || target % minimal_chern != 0) return std::nullopt;
    const std::int64_t d = target / minimal_chern;
    if (d < 0) return std::nullopt;
    return d;
}

}  // namespace shcalc
