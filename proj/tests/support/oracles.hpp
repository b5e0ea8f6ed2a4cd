#pragma once

// Test-only oracles that share no code paths with the library algorithms,
// plus seeded random generators for property tests.

#include "shcalc/linalg.hpp"
#include "shcalc/novikov.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace shcalc::testing {

/// value of a Laurent polynomial at t = q (q != 0), coefficients read directly.
inline Rational eval_laurent(const Laurent& p, const Rational& q) {
    Rational acc = 0;
    for (std::int64_t e = p.valuation(); !p.is_zero() && e <= p.top_exponent(); ++e) {
        Rational pw = 1;
        const std::int64_t k = e < 0 ? -e : e;
        for (std::int64_t i = 0; i < k; ++i) pw *= q;
        if (e < 0) pw = 1 / pw;
        acc += p.coeff(e) * pw;
    }
    return acc;
}

/// Evaluation at t = q over Q; empty when q is a pole.
inline std::optional<Rational> eval_at(const NovikovScalar& x, const Rational& q) {
    const Rational den = eval_laurent(x.denominator(), q);
    if (den == 0) return std::nullopt;
    return Rational(eval_laurent(x.numerator(), q) / den);
}

inline Rational random_coeff(std::mt19937_64& rng, CoefficientField field) {
    if (field == CoefficientField::GF2) return std::uniform_int_distribution<int>(0, 1)(rng);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    return c;
}

inline Laurent random_laurent(std::mt19937_64& rng, CoefficientField field, int max_terms = 3, int lo = -2,
                              int hi = 3) {
    Laurent p(field);
    const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
    std::uniform_int_distribution<int> exp(lo, hi);
    for (int k = 0; k < terms; ++k) p = p + Laurent::monomial(random_coeff(rng, field), exp(rng), field);
    return p;
}

inline NovikovScalar random_scalar(std::mt19937_64& rng, CoefficientField field) {
    Laurent num = random_laurent(rng, field);
    if (std::uniform_int_distribution<int>(0, 2)(rng) != 0) return NovikovScalar(num);
    // Denominator with nonzero constant term.
    Laurent den = Laurent::constant(1, field) + random_laurent(rng, field, 2, 1, 2);
    if (den.is_zero()) den = Laurent::constant(1, field);
    return NovikovScalar(num, den);
}

inline LambdaMatrix random_matrix(std::mt19937_64& rng, std::size_t size, CoefficientField field,
                                  bool monomials_only = false) {
    LambdaMatrix m(size, field);
    std::uniform_int_distribution<int> sparse(0, 2), exp(-1, 2);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            if (sparse(rng) == 0) continue;
            m(i, j) = monomials_only ? NovikovScalar::monomial(random_coeff(rng, field), exp(rng), field)
                                     : random_scalar(rng, field);
        }
    return m;
}

/// det(lambda I - M) via the Leibniz permutation sum, coefficients ascending.
inline LambdaPolynomial leibniz_char_poly(const LambdaMatrix& m) {
    const std::size_t s = m.size();
    const CoefficientField field = m.field();
    auto entry = [&](std::size_t i, std::size_t j) {
        LambdaPolynomial p{-m(i, j)};
        if (i == j) p.push_back(NovikovScalar::constant(1, field));
        return p;
    };
    auto mul = [&](const LambdaPolynomial& a, const LambdaPolynomial& b) {
        LambdaPolynomial c(a.size() + b.size() - 1, NovikovScalar(field));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    LambdaPolynomial total(s + 1, NovikovScalar(field));
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LambdaPolynomial term{NovikovScalar::constant(inversions % 2 ? -1 : 1, field)};
        for (std::size_t i = 0; i < s; ++i) term = mul(term, entry(i, perm[i]));
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace shcalc::testing
