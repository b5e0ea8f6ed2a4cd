#pragma once

// Exact arithmetic in the one-variable Novikov field: ratios of Laurent
// polynomials in t over Q or GF(2), kept in a unique canonical form.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shcalc {

using Rational = mpq_class;

enum class CoefficientField { Rationals, GF2 };

const char* to_string(CoefficientField field);

class FieldMismatch : public std::invalid_argument {
public:
    FieldMismatch() : std::invalid_argument("operands live over different coefficient fields") {}
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in the Novikov field") {}
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Image of an exact rational in the coefficient field. Over GF2 the
/// denominator must be odd; the result is 0 or 1.
Rational to_field(const Rational& value, CoefficientField field);

/// Finite Laurent polynomial sum_e c_e t^e. Stored densely from the lowest
/// nonzero exponent; the zero polynomial has no coefficients.
class Laurent {
public:
    explicit Laurent(CoefficientField field = CoefficientField::Rationals) : field_(field) {}

    static Laurent monomial(const Rational& coeff, std::int64_t exponent, CoefficientField field);
    static Laurent constant(const Rational& coeff, CoefficientField field) {
        return monomial(coeff, 0, field);
    }
    /// coeffs[k] is the coefficient of t^(low + k).
    static Laurent from_dense(std::vector<Rational> coeffs, std::int64_t low, CoefficientField field);

    CoefficientField field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const;
    std::int64_t valuation() const { return low_; }
    std::int64_t top_exponent() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    Rational coeff(std::int64_t exponent) const;
    const Rational& leading_coeff() const { return coeffs_.back(); }
    const std::vector<Rational>& dense() const { return coeffs_; }

    Laurent shifted(std::int64_t by) const;
    Laurent scaled(const Rational& factor) const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b);

    std::string to_string() const;

private:
    void normalize();

    CoefficientField field_;
    std::int64_t low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Element of the Novikov field Lambda. Canonical form: numerator is a
/// Laurent polynomial; denominator is an ordinary polynomial with nonzero
/// constant term, coprime to the numerator and monic. Equal values therefore
/// have identical representations.
class NovikovScalar {
public:
    explicit NovikovScalar(CoefficientField field = CoefficientField::Rationals)
        : num_(field), den_(Laurent::constant(1, field)) {}
    NovikovScalar(Laurent numerator);
    NovikovScalar(Laurent numerator, Laurent denominator);

    static NovikovScalar constant(const Rational& c, CoefficientField field) {
        return NovikovScalar(Laurent::constant(c, field));
    }
    static NovikovScalar monomial(const Rational& c, std::int64_t d, CoefficientField field) {
        return NovikovScalar(Laurent::monomial(c, d, field));
    }
    static NovikovScalar t(CoefficientField field) { return monomial(1, 1, field); }

    CoefficientField field() const { return num_.field(); }
    const Laurent& numerator() const { return num_; }
    const Laurent& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.term_count() == 1 && den_.valuation() == 0; }

    /// (c, d) when the value is c * t^d with c != 0.
    std::optional<std::pair<Rational, std::int64_t>> as_monomial() const;

    NovikovScalar inverse() const;

    NovikovScalar operator-() const;
    friend NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b);
    friend NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b);
    friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
    friend NovikovScalar operator/(const NovikovScalar& a, const NovikovScalar& b);
    NovikovScalar& operator+=(const NovikovScalar& o) { return *this = *this + o; }
    NovikovScalar& operator-=(const NovikovScalar& o) { return *this = *this - o; }
    NovikovScalar& operator*=(const NovikovScalar& o) { return *this = *this * o; }
    friend bool operator==(const NovikovScalar& a, const NovikovScalar& b);

    /// Laurent part as "c0*t^e0 + c1*t^e1 + ..." (ascending, bare "c" for
    /// e = 0); with a nontrivial denominator "(num)/(den)".
    std::string to_string() const;
    static NovikovScalar parse(std::string_view text, CoefficientField field);

private:
    struct Canonical {};
    NovikovScalar(Laurent num, Laurent den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Laurent num_;
    Laurent den_;
};

std::ostream& operator<<(std::ostream& os, const NovikovScalar& a);

/// Cohomological grading: t has degree 2N where N is the minimal Chern number.
struct GradingContext {
    std::int64_t minimal_chern = 0;
};

/// Degree 2Nd of a monomial c*t^d; absent for zero and for inhomogeneous values.
std::optional<std::int64_t> monomial_degree(const NovikovScalar& a, const GradingContext& ctx);

}  // namespace shcalc
